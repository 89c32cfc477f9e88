//! Truncated power series about the origin and the coefficient-level
//! operators acting on them: Hadamard product, the `B_κ^c` operator, the
//! Libera integral operator and the Alexander transform.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holomorphic::{Holomorphic, Jet};
use crate::special::BesselParams;

/// Truncation degree used for operator work unless stated otherwise.
pub const DEFAULT_ORDER: usize = 64;

/// Largest truncation degree the Bessel series constructors accept.
pub const MAX_ORDER: usize = 500;

/// Evaluation is refused beyond this radius.
pub const EVAL_GUARD_RADIUS: f64 = 1.05;

/// Coefficient-wise equality threshold for series identities.
pub const SERIES_EQ_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `a_0 + a_1 z + ... + a_N z^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

/// Direction of the Alexander transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Alexander {
    /// `f ↦ z f'`, i.e. `a_n ↦ n a_n`.
    ToStarlike,
    /// `f ↦ ∫_0^z f(t)/t dt`, i.e. `a_n ↦ a_n / n`.
    ToConvex,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParams("a power series needs at least one coefficient".into()));
        }
        if let Some(bad) = coeffs.iter().find(|a| !(a.re.is_finite() && a.im.is_finite())) {
            return Err(Error::NonFinite(*bad));
        }
        Ok(Self { coeffs })
    }

    fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        Self { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| ZERO)
    }

    /// The identity map `z`.
    pub fn identity(order: usize) -> Self {
        Self::from_fn(order.max(1), |n| if n == 1 { ONE } else { ZERO })
    }

    /// `z / (1 - z)`, the unit of the Hadamard product on normalized series.
    pub fn geometric(order: usize) -> Self {
        Self::from_fn(order.max(1), |n| if n == 0 { ZERO } else { ONE })
    }

    /// `-2 (z + log(1 - z)) / z = Σ_{n≥1} 2 z^n / (n+1)`, the Libera kernel.
    pub fn libera_kernel(order: usize) -> Self {
        Self::from_fn(order.max(1), |n| {
            if n == 0 {
                ZERO
            } else {
                Complex64::new(2.0 / (n as f64 + 1.0), 0.0)
            }
        })
    }

    /// Coefficients `b_n = (-c/4)^n / ((κ)_n n!)` of `φ_{ν,b,c}` up to degree `order`.
    pub fn phi(params: &BesselParams, order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OutOfDomain { what: "truncation order", value: order as f64 });
        }
        let kappa = params.kappa();
        let q = -params.c() / 4.0;
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut b = ONE;
        for n in 0..=order {
            coeffs.push(b);
            b *= q / ((kappa + n as f64) * (n as f64 + 1.0));
        }
        Ok(Self { coeffs })
    }

    /// `ϑ = z φ`, a normalized series of degree `order + 1`.
    pub fn vartheta(params: &BesselParams, order: usize) -> Result<Self> {
        Ok(Self::phi(params, order)?.times_z())
    }

    /// `-4κ(φ - 1)/c`, the normalized companion of `φ`; needs `c ≠ 0`.
    pub fn phi_normalized(params: &BesselParams, order: usize) -> Result<Self> {
        if params.c() == ZERO {
            return Err(Error::InvalidParams("c = 0 has no normalized companion".into()));
        }
        let scale = -4.0 * params.kappa() / params.c();
        let mut s = Self::phi(params, order)?;
        s.coeffs[0] = ZERO;
        for a in s.coeffs.iter_mut().skip(1) {
            *a *= scale;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero beyond the truncation degree.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    /// Member of the normalized class: `a_0 = 0` and `a_1 = 1`.
    pub fn is_normalized(&self) -> bool {
        self.coeff(0).norm() <= SERIES_EQ_TOL && (self.coeff(1) - ONE).norm() <= SERIES_EQ_TOL
    }

    pub fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized)
        }
    }

    /// Multiplication by `z`.
    pub fn times_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// `Σ a_n z^{2n+1}`, i.e. `z f(z²)`.
    pub fn odd_lift(&self) -> Self {
        Self::from_fn(2 * self.order() + 1, |k| if k % 2 == 1 { self.coeffs[k / 2] } else { ZERO })
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_fn(self.order() - 1, |n| self.coeffs[n + 1] * (n as f64 + 1.0))
    }

    /// Largest coefficient deviation, treating missing coefficients as zero.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).map(|k| (self.coeff(k) - other.coeff(k)).norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.max_deviation(other) < SERIES_EQ_TOL
    }

    /// Horner evaluation of the truncated polynomial, refused for `|z| > 1.05`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.guard(z)?;
        Ok(self.coeffs.iter().rev().fold(ZERO, |acc, &a| acc * z + a))
    }

    fn guard(&self, z: Complex64) -> Result<()> {
        let r = z.norm();
        if r > EVAL_GUARD_RADIUS || !r.is_finite() {
            return Err(Error::OutOfDomain { what: "series evaluation radius", value: r });
        }
        Ok(())
    }

    /// Hadamard (coefficient-wise) product, truncated to the smaller degree.
    pub fn hadamard(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| self.coeffs[n] * other.coeffs[n])
    }

    /// `B_κ^c f = ϑ_ν * f`, coefficient `z^{n+1} ↦ (-c/4)^n a_{n+1} / ((κ)_n n!)`.
    pub fn b_operator(&self, params: &BesselParams) -> Result<Self> {
        self.require_normalized()?;
        let b = Self::phi(params, self.order().saturating_sub(1))?;
        Ok(Self::from_fn(self.order(), |k| if k == 0 { ZERO } else { b.coeffs[k - 1] * self.coeffs[k] }))
    }

    /// Libera operator `L[f](z) = (2/z) ∫_0^z f(t) dt`, `a_n ↦ 2 a_n / (n+1)`.
    pub fn libera(&self) -> Result<Self> {
        let a0 = self.coeff(0);
        if a0 != ZERO {
            return Err(Error::NonvanishingAtZero(a0));
        }
        Ok(Self::from_fn(self.order(), |n| self.coeffs[n] * (2.0 / (n as f64 + 1.0))))
    }

    /// Alexander transform. The constant term is dropped in both directions,
    /// so the pair is mutually inverse on series with `a_0 = 0`.
    pub fn alexander(&self, direction: Alexander) -> Self {
        Self::from_fn(self.order(), |n| match (n, direction) {
            (0, _) => ZERO,
            (_, Alexander::ToStarlike) => self.coeffs[n] * n as f64,
            (_, Alexander::ToConvex) => self.coeffs[n] / n as f64,
        })
    }

    /// Coefficients as `[re, im]` pairs.
    pub fn to_pairs(&self) -> Vec<[f64; 2]> {
        self.coeffs.iter().map(|a| [a.re, a.im]).collect()
    }

    pub fn from_pairs(pairs: &[[f64; 2]]) -> Result<Self> {
        Self::new(pairs.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_pairs()).expect("finite coefficients serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let pairs: Vec<[f64; 2]> = serde_json::from_str(text)
            .map_err(|e| Error::InvalidParams(format!("series JSON: {e}")))?;
        Self::from_pairs(&pairs)
    }
}

impl Holomorphic for PowerSeries {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        self.guard(z)?;
        let mut value = ZERO;
        let mut d1 = ZERO;
        let mut d2 = ZERO;
        for &a in self.coeffs.iter().rev() {
            d2 = d2 * z + d1 * 2.0;
            d1 = d1 * z + value;
            value = value * z + a;
        }
        Ok(Jet { value, d1, d2 })
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(d)?;
        Self::from_pairs(&pairs).map_err(serde::de::Error::custom)
    }
}

fn zip_with(a: &PowerSeries, b: &PowerSeries, f: impl Fn(Complex64, Complex64) -> Complex64) -> PowerSeries {
    let order = a.order().max(b.order());
    PowerSeries::from_fn(order, |n| f(a.coeff(n), b.coeff(n)))
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: Self) -> PowerSeries {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: Self) -> PowerSeries {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::from_fn(self.order(), |n| -self.coeffs[n])
    }
}

impl Mul<Complex64> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, k: Complex64) -> PowerSeries {
        PowerSeries::from_fn(self.order(), |n| self.coeffs[n] * k)
    }
}
