//! Boundary functions whose extrema bound the admissibility conditions.
//!
//! Each is `|F(e^{iθ})|²` for an explicit `F` built from `r = e^{e^{iθ}}`
//! and `s = m e^{iθ} e^{e^{iθ}}`; the expected extremal location and value
//! are stored with the curve so that callers can compare.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use super::constants;
use crate::error::{Error, Result};
use crate::optimize::{golden_section_max, golden_section_min};

pub const EXTREMAL_SAMPLES: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ExtremalKind {
    /// `|s + r² - 1|²`, minimized at `θ = π`.
    G1,
    /// `|r - 1|²`, maximized at `θ = 0`.
    G2,
    /// `|r + α m e^{iθ} - 1|²`, minimized at `θ = π`.
    Ell1 { alpha: f64 },
    /// `|r² + m e^{iθ} r - 1|²`, minimized at `θ = π`.
    Ell2,
}

impl ExtremalKind {
    fn maximize(self) -> bool {
        matches!(self, ExtremalKind::G2)
    }

    /// The trigonometric form of the curve at `θ`.
    pub fn eval(self, theta: f64, m: f64) -> f64 {
        let (c, s) = (theta.cos(), theta.sin());
        let ec = c.exp();
        match self {
            ExtremalKind::G1 | ExtremalKind::Ell2 => {
                let e2 = (2.0 * c).exp();
                let re = m * ec * (theta + s).cos() + e2 * (2.0 * s).cos() - 1.0;
                let im = m * ec * (theta + s).sin() + e2 * (2.0 * s).sin();
                re * re + im * im
            }
            ExtremalKind::G2 => 1.0 + (2.0 * c).exp() - 2.0 * ec * s.cos(),
            ExtremalKind::Ell1 { alpha } => {
                let re = ec * s.cos() + alpha * m * c - 1.0;
                let im = ec * s.sin() + alpha * m * s;
                re * re + im * im
            }
        }
    }

    /// Expected `(θ*, value)`.
    pub fn expected(self, m: f64) -> (f64, f64) {
        match self {
            ExtremalKind::G1 | ExtremalKind::Ell2 => (PI, constants::g1_min(m)),
            ExtremalKind::G2 => (0.0, constants::g2_max()),
            ExtremalKind::Ell1 { alpha } => (PI, constants::ell1_min(alpha, m)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalCurve {
    pub kind: ExtremalKind,
    pub m: f64,
    /// `(θ, value)` on an equispaced grid of `[0, 2π)`.
    pub samples: Vec<(f64, f64)>,
    /// Refined extremum location in `[0, 2π)`.
    pub theta_star: f64,
    pub extremal_value: f64,
    pub expected_theta: f64,
    pub expected_value: f64,
}

impl ExtremalCurve {
    /// Distance on the circle between the refined and expected locations.
    pub fn location_error(&self) -> f64 {
        let d = (self.theta_star - self.expected_theta).rem_euclid(TAU);
        d.min(TAU - d)
    }

    pub fn value_error(&self) -> f64 {
        (self.extremal_value - self.expected_value).abs()
    }
}

/// Samples the curve, then refines the extremum by golden-section search
/// within one grid step of the best sample.
pub fn extremal_curve(kind: ExtremalKind, m: f64) -> Result<ExtremalCurve> {
    if !(m >= 1.0) || !m.is_finite() {
        return Err(Error::OutOfDomain { what: "m (must be at least 1)", value: m });
    }
    if let ExtremalKind::Ell1 { alpha } = kind {
        if !(alpha > 1.0 / std::f64::consts::E) {
            return Err(Error::OutOfDomain { what: "alpha (must exceed 1/e)", value: alpha });
        }
    }
    let step = TAU / EXTREMAL_SAMPLES as f64;
    let samples: Vec<(f64, f64)> = (0..EXTREMAL_SAMPLES)
        .map(|k| {
            let theta = k as f64 * step;
            (theta, kind.eval(theta, m))
        })
        .collect();
    let better = |a: f64, b: f64| if kind.maximize() { a > b } else { a < b };
    let (theta0, _) = samples
        .iter()
        .copied()
        .fold(samples[0], |best, s| if better(s.1, best.1) { s } else { best });

    let f = |t: f64| kind.eval(t, m);
    let refined = if kind.maximize() {
        golden_section_max(f, theta0 - step, theta0 + step, 1e-12)
    } else {
        golden_section_min(f, theta0 - step, theta0 + step, 1e-12)
    };
    let (expected_theta, expected_value) = kind.expected(m);
    Ok(ExtremalCurve {
        kind,
        m,
        samples,
        theta_star: refined.x.rem_euclid(TAU),
        extremal_value: refined.value,
        expected_theta,
        expected_value,
    })
}
