//! Hypothesis checkers for the membership conditions on `φ_ν`, `ϑ_ν`,
//! their Bessel-family specializations, Libera images and `ω`.

use std::f64::consts::E;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::constants;
use super::report::{Hypothesis, Relation, TheoremId, TheoremReport};
use crate::error::Result;
use crate::gft::{self, CheckOptions, Class};
use crate::holomorphic::Holomorphic;
use crate::series::{PowerSeries, DEFAULT_ORDER};
use crate::special::BesselParams;

fn c_nonzero(params: &BesselParams) -> Hypothesis {
    Hypothesis::new("c != 0", params.c().norm(), Relation::NotEqual, 0.0)
}

fn re_kappa_at_least(params: &BesselParams, shift: f64) -> Hypothesis {
    let name = if shift == 0.0 { "Re(kappa) >= |c|/4".to_string() } else { format!("Re(kappa) >= |c|/4 + {shift}") };
    Hypothesis::new(name, params.kappa().re, Relation::AtLeast, params.c().norm() / 4.0 + shift)
}

fn distance_condition(params: &BesselParams, center: f64) -> Hypothesis {
    let lhs = (params.kappa() - center).norm() + params.c().norm() / (4.0 * (E - 1.0));
    Hypothesis::new(
        format!("|kappa - {center}| + |c|/(4(e-1)) <= (e^2+e-1)/(e^2(e-1))"),
        lhs,
        Relation::AtMost,
        constants::convex_rhs(),
    )
}

/// `Re κ ≥ |c|/4 + 1` implies `φ_ν ≺ e^z`.
pub fn hyp_pe(params: &BesselParams, verify: Option<&CheckOptions>) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(TheoremId::ThmPe, Some(*params), vec![re_kappa_at_least(params, 1.0)]);
    if let (true, Some(opts)) = (report.applicable, verify) {
        let phi = PowerSeries::phi(params, DEFAULT_ORDER)?;
        report.conclusion_check = Some(gft::check_subordinate_exp(|z| phi.value(z), opts)?);
    }
    Ok(report)
}

/// `c ≠ 0`, `Re κ ≥ |c|/4` and `|κ-2| + |c|/(4(e-1)) ≤ (e²+e-1)/(e²(e-1))`
/// imply `-4κ(φ_ν - 1)/c ∈ 𝒦_e`.
pub fn hyp_ke(params: &BesselParams, verify: Option<&CheckOptions>) -> Result<TheoremReport> {
    let hyps = vec![c_nonzero(params), re_kappa_at_least(params, 0.0), distance_condition(params, 2.0)];
    let mut report = TheoremReport::new(TheoremId::ThmKe, Some(*params), hyps);
    if let (true, Some(opts)) = (report.applicable, verify) {
        let f = PowerSeries::phi_normalized(params, DEFAULT_ORDER)?;
        report.conclusion_check = Some(gft::check_class(&f, Class::Convex, opts)?);
    }
    Ok(report)
}

/// `c ≠ 0`, `Re κ ≥ |c|/4 + 1` and `|κ-3| + |c|/(4(e-1)) ≤ (e²+e-1)/(e²(e-1))`
/// imply `ϑ_ν = z φ_ν ∈ 𝒮*_e`.
pub fn hyp_se(params: &BesselParams, verify: Option<&CheckOptions>) -> Result<TheoremReport> {
    let hyps = vec![c_nonzero(params), re_kappa_at_least(params, 1.0), distance_condition(params, 3.0)];
    let mut report = TheoremReport::new(TheoremId::ThmSe, Some(*params), hyps);
    if let (true, Some(opts)) = (report.applicable, verify) {
        let f = PowerSeries::vartheta(params, DEFAULT_ORDER)?;
        report.conclusion_check = Some(gft::check_class(&f, Class::Starlike, opts)?);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `J_ν` and `I_ν` (`b = 1`, `c = ±1`, `κ = ν + 1`).
    Bessel,
    /// `j_ν` and `i_ν` (`b = 2`, `c = ±1`, `κ = ν + 3/2`).
    Spherical,
}

impl Family {
    pub fn b(self) -> f64 {
        match self {
            Family::Bessel => 1.0,
            Family::Spherical => 2.0,
        }
    }
}

/// Part (a) is the convex statement, part (b) the starlike one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    A,
    B,
}

/// The corollaries for the Bessel and spherical Bessel families, in their
/// specialized form (conditions on `ν` alone).
///
/// Conclusions cover both the `c = 1` and `c = -1` members; the first goes
/// into `conclusion_check`, the second into `supporting_checks`.
pub fn hyp_corollary(
    nu: Complex64,
    family: Family,
    part: Part,
    verify: Option<&CheckOptions>,
) -> Result<TheoremReport> {
    let (id, re_min, center, scale, rhs) = match (family, part) {
        (Family::Bessel, Part::A) => (TheoremId::CorBesselA, -0.75, 1.0, 1.0, constants::bessel_corollary_rhs()),
        (Family::Bessel, Part::B) => (TheoremId::CorBesselB, 0.25, 2.0, 1.0, constants::bessel_corollary_rhs()),
        (Family::Spherical, Part::A) => (TheoremId::CorSphericalA, -1.25, 1.0, 2.0, constants::spherical_corollary_rhs()),
        (Family::Spherical, Part::B) => (TheoremId::CorSphericalB, -0.25, 3.0, 2.0, constants::spherical_corollary_rhs()),
    };
    let dist_name = if scale == 1.0 { format!("|nu - {center}|") } else { format!("|2 nu - {center}|") };
    let hyps = vec![
        Hypothesis::new(format!("Re(nu) >= {re_min}"), nu.re, Relation::AtLeast, re_min),
        Hypothesis::new(format!("{dist_name} <= const"), (nu * scale - center).norm(), Relation::AtMost, rhs),
    ];
    let params = BesselParams::new(nu, family.b().into(), 1.0.into())?;
    let mut report = TheoremReport::new(id, Some(params), hyps);
    if let (true, Some(opts)) = (report.applicable, verify) {
        let mut checks = Vec::with_capacity(2);
        for c in [1.0, -1.0] {
            let p = BesselParams::new(nu, family.b().into(), c.into())?;
            // scaling by a constant leaves 1 + z f''/f' unchanged, so the
            // normalized companion decides -4κ(φ - 1) as well
            checks.push(match part {
                Part::A => gft::check_class(&PowerSeries::phi_normalized(&p, DEFAULT_ORDER)?, Class::Convex, opts)?,
                Part::B => gft::check_class(&PowerSeries::vartheta(&p, DEFAULT_ORDER)?, Class::Starlike, opts)?,
            });
        }
        let second = checks.pop();
        report.conclusion_check = checks.pop();
        report.supporting_checks.extend(second);
    }
    Ok(report)
}

/// Libera images: under the `𝒦_e` hypotheses `L[-4κ(φ_ν-1)/c] ∈ 𝒦_e`, and
/// under the `𝒮*_e` hypotheses `L[ϑ_ν] ∈ 𝒮*_e`.
pub fn hyp_libera(params: &BesselParams, target: Class, verify: Option<&CheckOptions>) -> Result<TheoremReport> {
    let base = match target {
        Class::Convex => hyp_ke(params, None)?,
        Class::Starlike => hyp_se(params, None)?,
    };
    let mut report = TheoremReport::new(TheoremId::CorLibera, Some(*params), base.hypotheses);
    if let (true, Some(opts)) = (report.applicable, verify) {
        let (f, class) = match target {
            Class::Convex => (PowerSeries::phi_normalized(params, DEFAULT_ORDER)?, Class::Convex),
            Class::Starlike => (PowerSeries::vartheta(params, DEFAULT_ORDER)?, Class::Starlike),
        };
        report.conclusion_check = Some(gft::check_class(&f.libera()?, class, opts)?);
    }
    Ok(report)
}

/// `h(z) = z φ_ν(z²)`, equal to `2^ν Γ(κ) z^{1-ν} ω_{ν,b,c}(z)`.
pub fn omega_normalized_series(params: &BesselParams, order: usize) -> Result<PowerSeries> {
    Ok(PowerSeries::phi(params, order)?.odd_lift())
}

/// Real `κ ≥ max{|c|/4 + 1, 5|c|/3 + 3/4}` implies
/// `2^ν Γ(κ) z^{1-ν} ω_{ν,b,c} ∈ 𝒮*_e`; the intermediate bound
/// `|z φ'/φ| < 1/4` is checked as a supporting report.
pub fn hyp_omega_se(params: &BesselParams, verify: Option<&CheckOptions>) -> Result<TheoremReport> {
    let kappa = params.kappa();
    let abs_c = params.c().norm();
    let hyps = vec![
        Hypothesis::new("Im(kappa) = 0", kappa.im.abs(), Relation::AtMost, 0.0),
        Hypothesis::new("kappa >= |c|/4 + 1", kappa.re, Relation::AtLeast, abs_c / 4.0 + 1.0),
        Hypothesis::new("kappa >= 5|c|/3 + 3/4", kappa.re, Relation::AtLeast, 5.0 * abs_c / 3.0 + 0.75),
    ];
    let mut report = TheoremReport::new(TheoremId::ThmOmegaSe, Some(*params), hyps);
    if let (true, Some(opts)) = (report.applicable, verify) {
        let phi = PowerSeries::phi(params, DEFAULT_ORDER)?;
        let h = phi.odd_lift();
        report.conclusion_check = Some(gft::check_class(&h, Class::Starlike, opts)?);
        let p = |z: Complex64| -> Result<Complex64> {
            let jet = phi.jet(z)?;
            if jet.value.norm() <= gft::DENOMINATOR_FLOOR {
                return Err(crate::Error::ZeroDenominator(z));
            }
            Ok(z * jet.d1 / jet.value)
        };
        report.supporting_checks.push(gft::check_quarter_bound(p, opts)?);
    }
    Ok(report)
}
