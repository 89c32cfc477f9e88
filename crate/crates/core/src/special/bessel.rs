//! Series evaluation of the normalized generalized Bessel function
//! `φ(z) = Σ (-c/4)^n z^n / ((κ)_n n!)`, its derivatives, the generalized
//! Bessel function `ω` and the classical named members of the family.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::gamma;
use super::params::BesselParams;
use crate::error::{Error, Result};

/// Default cap on the number of series terms.
pub const DEFAULT_MAX_TERMS: usize = 500;

/// Smallest tolerance accepted by the series evaluators.
pub const MIN_TOLERANCE: f64 = 1e-15;

/// A truncated series value with the number of terms summed and a bound on
/// the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

impl EvalResult {
    fn scaled(self, factor: Complex64) -> Self {
        Self {
            value: self.value * factor,
            terms_used: self.terms_used,
            tail_bound: self.tail_bound * factor.norm(),
        }
    }
}

/// Sums `t_0 + t_1 + ...` where `t_{n+1} = t_n · ratio(n)`.
///
/// `monotone_from` is the first index after which `|ratio(n)|` is known to be
/// non-increasing; the geometric tail bound is only trusted past it.
fn sum_ratio_series(
    first: Complex64,
    ratio: impl Fn(usize) -> Complex64,
    monotone_from: usize,
    tol: f64,
    cap: usize,
) -> Result<EvalResult> {
    if !(tol >= MIN_TOLERANCE) {
        return Err(Error::OutOfDomain { what: "tolerance", value: tol });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = first;
    for n in 0..cap {
        sum += term;
        let next = term * ratio(n);
        if next == Complex64::new(0.0, 0.0) {
            return Ok(EvalResult { value: sum, terms_used: n + 1, tail_bound: 0.0 });
        }
        let rho = next.norm() / term.norm();
        if n >= monotone_from && rho < 0.5 {
            let tail = next.norm() / (1.0 - rho);
            if tail < tol {
                return Ok(EvalResult { value: sum, terms_used: n + 1, tail_bound: tail });
            }
        }
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::NonFinite(sum));
        }
        term = next;
    }
    Err(Error::MaxTermsExceeded { cap })
}

/// First index `m` with `Re(κ) + m >= 0`, from which `|κ+m|` grows with `m`.
fn monotone_start(kappa: Complex64) -> usize {
    if kappa.re >= 0.0 {
        0
    } else {
        (-kappa.re).ceil() as usize
    }
}

/// `φ_{ν,b,c}(z)` to absolute tolerance `tol`.
pub fn phi_eval(params: &BesselParams, z: Complex64, tol: f64) -> Result<EvalResult> {
    phi_eval_capped(params, z, tol, DEFAULT_MAX_TERMS)
}

pub fn phi_eval_capped(
    params: &BesselParams,
    z: Complex64,
    tol: f64,
    cap: usize,
) -> Result<EvalResult> {
    phi_derivative_capped(params, z, 0, tol, cap)
}

/// The `order`-th derivative of `φ` (order 1, 2 or 3), by term-wise
/// differentiation of the series.
pub fn phi_derivative(
    params: &BesselParams,
    z: Complex64,
    order: usize,
    tol: f64,
) -> Result<EvalResult> {
    if !(1..=3).contains(&order) {
        return Err(Error::OutOfDomain { what: "derivative order", value: order as f64 });
    }
    phi_derivative_capped(params, z, order, tol, DEFAULT_MAX_TERMS)
}

fn phi_derivative_capped(
    params: &BesselParams,
    z: Complex64,
    order: usize,
    tol: f64,
    cap: usize,
) -> Result<EvalResult> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite(z));
    }
    let kappa = params.kappa();
    let q = -params.c() / 4.0;
    // Leading term b_k k! of the k-th derivative; (κ)_k k! cancels the k!.
    let mut first = Complex64::new(1.0, 0.0);
    for j in 0..order {
        first *= q / (kappa + j as f64);
    }
    // d^k/dz^k φ_κ = b_k k! · φ_{κ+k}
    let shifted = kappa + order as f64;
    let step = q * z;
    sum_ratio_series(
        first,
        |m| step / ((shifted + m as f64) * (m as f64 + 1.0)),
        monotone_start(shifted),
        tol,
        cap,
    )
}

/// `ϑ(z) = z φ(z)`.
pub fn vartheta_eval(params: &BesselParams, z: Complex64, tol: f64) -> Result<EvalResult> {
    let tol = if z.norm() > 1.0 { (tol / z.norm()).max(MIN_TOLERANCE) } else { tol };
    Ok(phi_eval(params, z, tol)?.scaled(z))
}

/// `z^ν` with the cut along the ray `arg z = π + cut_angle`.
fn rotated_power(z: Complex64, nu: Complex64, cut_angle: f64) -> Result<Complex64> {
    let rotation = Complex64::from_polar(1.0, -cut_angle);
    let local_arg = (z * rotation).arg();
    let nu_is_integer = nu.im == 0.0 && nu.re.fract() == 0.0;
    if !nu_is_integer && (PI - local_arg.abs()).abs() < 1e-14 {
        return Err(Error::Branch(z));
    }
    let log_z = Complex64::new(z.norm().ln(), local_arg + cut_angle);
    Ok((nu * log_z).exp())
}

/// The generalized Bessel function `ω_{ν,b,c}(z) = z^ν φ(z²) / (2^ν Γ(κ))`.
///
/// `branch_cut_angle` rotates the cut of `z^ν` away from the negative real
/// axis (0 gives the principal branch).
pub fn omega_eval(
    params: &BesselParams,
    z: Complex64,
    branch_cut_angle: f64,
    tol: f64,
) -> Result<EvalResult> {
    let nu = params.nu();
    let gamma_kappa = gamma(params.kappa())?;
    let denom = (nu * 2f64.ln()).exp() * gamma_kappa;
    if z == Complex64::new(0.0, 0.0) {
        let value = if nu == Complex64::new(0.0, 0.0) {
            Complex64::new(1.0, 0.0) / denom
        } else if nu.re > 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            return Err(Error::Branch(z));
        };
        return Ok(EvalResult { value, terms_used: 1, tail_bound: 0.0 });
    }
    let prefactor = rotated_power(z, nu, branch_cut_angle)? / denom;
    let inner_tol = (tol / prefactor.norm().max(f64::MIN_POSITIVE)).clamp(MIN_TOLERANCE, 1.0);
    Ok(phi_eval(params, z * z, inner_tol)?.scaled(prefactor))
}

/// Classical members of the generalized Bessel family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedFunction {
    /// Bessel function of the first kind `J_ν`.
    J,
    /// Modified Bessel function of the first kind `I_ν`.
    I,
    /// Spherical Bessel function `j_ν`.
    JSph,
    /// Modified spherical Bessel function `i_ν`.
    ISph,
    /// Normalized `𝒥_ν(z) = 2^ν Γ(ν+1) z^{-ν/2} J_ν(√z)`.
    CalJ,
    /// Normalized `𝓘_ν(z) = 2^ν Γ(ν+1) z^{-ν/2} I_ν(√z)`.
    CalI,
    /// Normalized spherical `𝔧_ν(z) = 2^{ν+1} Γ(ν+3/2) z^{-ν/2} j_ν(√z) / √π`.
    FrakJ,
    /// Normalized modified spherical `𝔦_ν`.
    FrakI,
}

impl NamedFunction {
    pub const ALL: [NamedFunction; 8] = [
        Self::J,
        Self::I,
        Self::JSph,
        Self::ISph,
        Self::CalJ,
        Self::CalI,
        Self::FrakJ,
        Self::FrakI,
    ];

    /// The `(b, c)` pair selecting this member of the family.
    pub fn b_c(self) -> (f64, f64) {
        match self {
            Self::J | Self::CalJ => (1.0, 1.0),
            Self::I | Self::CalI => (1.0, -1.0),
            Self::JSph | Self::FrakJ => (2.0, 1.0),
            Self::ISph | Self::FrakI => (2.0, -1.0),
        }
    }

    pub fn params(self, nu: Complex64) -> Result<BesselParams> {
        let (b, c) = self.b_c();
        BesselParams::new(nu, b.into(), c.into())
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::J => "J",
            Self::I => "I",
            Self::JSph => "j_sph",
            Self::ISph => "i_sph",
            Self::CalJ => "calJ",
            Self::CalI => "calI",
            Self::FrakJ => "frakj",
            Self::FrakI => "fraki",
        }
    }
}

impl std::str::FromStr for NamedFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown function name `{s}`")))
    }
}

pub fn named_family(
    name: NamedFunction,
    nu: Complex64,
    z: Complex64,
    tol: f64,
) -> Result<EvalResult> {
    let params = name.params(nu)?;
    match name {
        NamedFunction::J | NamedFunction::I => omega_eval(&params, z, 0.0, tol),
        NamedFunction::JSph | NamedFunction::ISph => {
            let half_sqrt_pi = Complex64::new(PI.sqrt() / 2.0, 0.0);
            let inner_tol = (tol / half_sqrt_pi.re).max(MIN_TOLERANCE);
            Ok(omega_eval(&params, z, 0.0, inner_tol)?.scaled(half_sqrt_pi))
        }
        NamedFunction::CalJ | NamedFunction::CalI | NamedFunction::FrakJ | NamedFunction::FrakI => {
            phi_eval(&params, z, tol)
        }
    }
}
