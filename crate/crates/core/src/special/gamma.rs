//! Complex Gamma function and the rising factorial.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance below which an argument is treated as sitting on a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

// Lanczos approximation with g = 607/128 and 15 terms (Godfrey's coefficients).
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_76e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

/// Returns true when `z` is within [`POLE_TOLERANCE`] of one of 0, -1, -2, ...
pub fn is_near_nonpositive_integer(z: Complex64) -> bool {
    let k = z.re.round();
    k <= 0.0 && (z - Complex64::new(k, 0.0)).norm() <= POLE_TOLERANCE
}

/// Euler's Gamma function for complex arguments.
///
/// Uses a Lanczos sum for `Re z >= 1/2` and the reflection formula
/// `Γ(z) Γ(1-z) = π / sin(πz)` otherwise.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite(z));
    }
    if is_near_nonpositive_integer(z) {
        return Err(Error::Pole(z));
    }
    if z.re < 0.5 {
        let s = (z * PI).sin();
        Ok(Complex64::new(PI, 0.0) / (s * lanczos(Complex64::new(1.0, 0.0) - z)))
    } else {
        Ok(lanczos(z))
    }
}

fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut sum = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // log form keeps the power from overflowing before the exponential damps it
    let log_val = (z + 0.5) * t.ln() - t + sum.ln() + 0.5 * (2.0 * PI).ln();
    log_val.exp()
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: Complex64, n: usize) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, k| acc * (x + k as f64))
}
