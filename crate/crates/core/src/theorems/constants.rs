//! Threshold constants of the sufficient conditions, evaluated from `e`.

use std::f64::consts::E;

/// `(e² + e - 1) / (e² (e - 1))`, right-hand side of the `𝒦_e` condition.
pub fn convex_rhs() -> f64 {
    (E * E + E - 1.0) / (E * E * (E - 1.0))
}

/// `1/e² + 3/(4(e-1))`, the Bessel-family specialization with `|c| = 1`.
pub fn bessel_corollary_rhs() -> f64 {
    1.0 / (E * E) + 3.0 / (4.0 * (E - 1.0))
}

/// `2/e² + 3/(2(e-1))`, the spherical-family specialization.
pub fn spherical_corollary_rhs() -> f64 {
    2.0 / (E * E) + 3.0 / (2.0 * (E - 1.0))
}

/// Radius `α - 1/e` of the disk in the linear-combination criterion.
pub fn linear_threshold(alpha: f64) -> f64 {
    alpha - 1.0 / E
}

/// `1/e - 1/e² + 1`, radius of the disk in the product criterion.
pub fn product_threshold() -> f64 {
    1.0 / E - 1.0 / (E * E) + 1.0
}

/// Smallest real order for which the `ω` starlikeness condition holds for
/// the Bessel pair (`|c| = 1`, `κ = ν + 1`): `5/3 + 3/4 - 1`.
pub fn omega_bessel_order_threshold() -> f64 {
    5.0 / 3.0 + 3.0 / 4.0 - 1.0
}

/// Extremal value `(-m/e + 1/e² - 1)²` of `g₁` and `ℓ₂` at `θ = π`.
pub fn g1_min(m: f64) -> f64 {
    (-m / E + 1.0 / (E * E) - 1.0).powi(2)
}

/// Extremal value `(e - 1)²` of `g₂` at `θ = 0`.
pub fn g2_max() -> f64 {
    (E - 1.0).powi(2)
}

/// Extremal value `(αm + 1 - 1/e)²` of `ℓ₁` at `θ = π`.
pub fn ell1_min(alpha: f64, m: f64) -> f64 {
    (alpha * m + 1.0 - 1.0 / E).powi(2)
}
