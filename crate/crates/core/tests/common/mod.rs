//! High-precision reference values shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::ops::Pow;
use rug::{Complex, Float};

pub const PREC: u32 = 256;

pub fn mp(z: Complex64) -> Complex {
    Complex::with_val(PREC, (z.re, z.im))
}

pub fn to_c64(z: &Complex) -> Complex64 {
    Complex64::new(z.real().to_f64(), z.imag().to_f64())
}

pub fn rel_err(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(1e-300)
}

/// Points uniform in the annulus `min_r ≤ |z| ≤ max_r`.
pub fn disk_points(seed: u64, count: usize, min_r: f64, max_r: f64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u: f64 = rng.random_range(min_r * min_r..=max_r * max_r);
            let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(u.sqrt(), theta)
        })
        .collect()
}

/// Elementary closed forms of members of the family, written in `s = √z`.
pub mod closed {
    use super::*;

    fn c(x: f64) -> Complex {
        Complex::with_val(PREC, (x, 0.0))
    }

    fn sqrt(z: &Complex) -> Complex {
        z.clone().sqrt()
    }

    /// `sin √(2z) / √(2z)`.
    pub fn phi_1_0_2(z: &Complex) -> Complex {
        let t = sqrt(&(z.clone() * 2u32));
        t.clone().sin() / t
    }

    /// `(√6 sin √(6z) / z^{3/2} - 6 cos √(6z) / z) / 12`.
    pub fn phi_2_0_6(z: &Complex) -> Complex {
        let s = sqrt(z);
        let t = sqrt(&(z.clone() * 6u32));
        let six = Float::with_val(PREC, 6u32).sqrt();
        let a = t.clone().sin() * six / (z.clone() * &s);
        let b = t.cos() * 6u32 / z.clone();
        (a - b) / 12u32
    }

    /// `(21(2z - 3) cos √(10z) / z³ + 63(1 - 4z) sin √(10z) / (√10 z^{7/2})) / 40`.
    pub fn phi_3_2_10(z: &Complex) -> Complex {
        let s = sqrt(z);
        let t = sqrt(&(z.clone() * 10u32));
        let ten = Float::with_val(PREC, 10u32).sqrt();
        let z3 = z.clone().pow(3u32);
        let a = (z.clone() * 2u32 - 3u32) * 21u32 * t.clone().cos() / z3.clone();
        let b = (c(1.0) - z.clone() * 4u32) * 63u32 * t.sin() / (z3 * s * ten);
        (a + b) / 40u32
    }

    pub fn cal_j_half(z: &Complex) -> Complex {
        let s = sqrt(z);
        s.clone().sin() / s
    }

    pub fn cal_i_half(z: &Complex) -> Complex {
        let s = sqrt(z);
        s.clone().sinh() / s
    }

    /// `z 𝒥_{3/2} = 3(sin s / s - cos s)`.
    pub fn z_cal_j_3_2(z: &Complex) -> Complex {
        let s = sqrt(z);
        (s.clone().sin() / s.clone() - s.cos()) * 3u32
    }

    /// `z 𝓘_{3/2} = 3(cosh s - sinh s / s)`.
    pub fn z_cal_i_3_2(z: &Complex) -> Complex {
        let s = sqrt(z);
        (s.clone().cosh() - s.clone().sinh() / s) * 3u32
    }

    /// `z 𝒥_{5/2} = 15((3 - z) sin s - 3 s cos s) / s³`.
    pub fn z_cal_j_5_2(z: &Complex) -> Complex {
        let s = sqrt(z);
        let num = (c(3.0) - z.clone()) * s.clone().sin() - s.clone() * s.clone().cos() * 3u32;
        num * 15u32 / s.pow(3u32)
    }

    /// `z 𝓘_{5/2} = 15((3 + z) sinh s - 3 s cosh s) / s³`.
    pub fn z_cal_i_5_2(z: &Complex) -> Complex {
        let s = sqrt(z);
        let num = (c(3.0) + z.clone()) * s.clone().sinh() - s.clone() * s.clone().cosh() * 3u32;
        num * 15u32 / s.pow(3u32)
    }

    /// The same with `cos` in place of `cosh` in the second term.
    pub fn z_cal_i_5_2_with_cos(z: &Complex) -> Complex {
        let s = sqrt(z);
        let num = (c(3.0) + z.clone()) * s.clone().sinh() - s.clone() * s.clone().cos() * 3u32;
        num * 15u32 / s.pow(3u32)
    }

    /// `ϑ_{-1/2,1,1} = z cos s`.
    pub fn vartheta_m1_2(z: &Complex) -> Complex {
        sqrt(z).cos() * z
    }

    /// `ϑ_{-3/2,1,1} = z (cos s + s sin s)`.
    pub fn vartheta_m3_2(z: &Complex) -> Complex {
        let s = sqrt(z);
        (s.clone().cos() + s.clone() * s.sin()) * z
    }

    /// `ϑ_{-5/2,1,1} = z cos s - z² cos s / 3 + z s sin s`.
    pub fn vartheta_m5_2_j(z: &Complex) -> Complex {
        let s = sqrt(z);
        let cos = s.clone().cos();
        z.clone() * &cos - z.clone().square() * cos / 3u32 + z.clone() * &s * s.clone().sin()
    }

    /// `ϑ_{-5/2,1,-1} = z cosh s + z² cosh s / 3 - z s sinh s`.
    pub fn vartheta_m5_2_i(z: &Complex) -> Complex {
        let s = sqrt(z);
        let cosh = s.clone().cosh();
        z.clone() * &cosh + z.clone().square() * cosh / 3u32 - z.clone() * &s * s.clone().sinh()
    }

    /// `z ϑ''/ϑ'` for `ϑ_{-5/2,1,1}`.
    pub fn zf2_m5_2(z: &Complex) -> Complex {
        let s = sqrt(z);
        let (sin, cos) = (s.clone().sin(), s.clone().cos());
        let num = z.clone() * ((c(4.0) + z.clone()) * &cos + s.clone() * &sin * 4u32);
        let den = ((c(6.0) - z.clone()) * &cos + s * (c(6.0) + z.clone()) * &sin) * 2u32;
        num / den
    }

    /// `1 + z 𝒥''_{1/2}/𝒥'_{1/2}`.
    pub fn convex_cal_j_half(z: &Complex) -> Complex {
        let s = sqrt(z);
        let (sin, cos) = (s.clone().sin(), s.clone().cos());
        let num = (c(1.0) - z.clone()) * &sin - s.clone() * &cos;
        let den = s * &cos * 2u32 - sin * 2u32;
        num / den
    }

    /// `L[-6(𝒥_{1/2} - 1)] = (12/z)(z + 2 cos s - 2)`.
    pub fn libera_cal_j_half(z: &Complex) -> Complex {
        let s = sqrt(z);
        (z.clone() + s.cos() * 2u32 - 2u32) * 12u32 / z.clone()
    }

    /// `L[-6(𝓘_{1/2} - 1)] = (12/z)(z - 2 cosh s + 2)`.
    pub fn libera_cal_i_half(z: &Complex) -> Complex {
        let s = sqrt(z);
        (z.clone() - s.cosh() * 2u32 + 2u32) * 12u32 / z.clone()
    }

    /// `L[z 𝒥_{3/2}] = -(12/z)(s sin s + 2 cos s - 2)`.
    pub fn libera_z_cal_j_3_2(z: &Complex) -> Complex {
        let s = sqrt(z);
        -((s.clone() * s.clone().sin() + s.cos() * 2u32 - 2u32) * 12u32 / z.clone())
    }

    /// `L[z 𝓘_{3/2}] = (12/z)(s sinh s - 2 cosh s + 2)`.
    pub fn libera_z_cal_i_3_2(z: &Complex) -> Complex {
        let s = sqrt(z);
        (s.clone() * s.clone().sinh() - s.cosh() * 2u32 + 2u32) * 12u32 / z.clone()
    }
}

/// `ω_{ν,b,c}(z) = Σ (-c)^n (z/2)^{2n+ν} / (n! Γ(n + κ))` for real `ν, b, c`,
/// principal branch, summed at high precision.
pub fn omega_direct(nu: f64, b: f64, c: f64, z: Complex64, terms: u32) -> Complex64 {
    let kappa = Float::with_val(PREC, nu + (b + 1.0) / 2.0);
    let half = mp(z) / 2u32;
    let log_half = half.clone().ln();
    let mut sum = Complex::with_val(PREC, 0);
    let mut fact = Float::with_val(PREC, 1u32);
    let mut minus_c_pow = Float::with_val(PREC, 1u32);
    for n in 0..terms {
        if n > 0 {
            fact *= n;
            minus_c_pow *= -c;
        }
        let g = (kappa.clone() + n).gamma();
        let power = (log_half.clone() * (Float::with_val(PREC, nu) + 2 * n)).exp();
        sum += power * &minus_c_pow / (fact.clone() * g);
    }
    to_c64(&sum)
}

/// `Γ(z)` through recurrence to large argument and the Stirling series.
pub fn gamma_stirling(z: Complex64) -> Complex64 {
    const SHIFT: u32 = 60;
    // B_{2k} / (2k (2k-1)) for k = 1..10
    const COEFFS: [(i64, i64); 10] = [
        (1, 12),
        (-1, 360),
        (1, 1260),
        (-1, 1680),
        (1, 1188),
        (-691, 360360),
        (1, 156),
        (-3617, 122400),
        (43867, 244188),
        (-174611, 125400),
    ];
    let z0 = mp(z);
    let w = z0.clone() + SHIFT;
    let pi2 = Float::with_val(PREC, rug::float::Constant::Pi) * 2u32;
    let mut lg = (w.clone() - Float::with_val(PREC, 0.5)) * w.clone().ln() - w.clone() + pi2.ln() / 2u32;
    let mut wpow = w.clone();
    let w2 = w.clone().square();
    for (num, den) in COEFFS {
        lg += Float::with_val(PREC, num) / Float::with_val(PREC, den) / wpow.clone();
        wpow *= &w2;
    }
    let mut prod = Complex::with_val(PREC, 1);
    for k in 0..SHIFT {
        prod *= z0.clone() + k;
    }
    to_c64(&(lg.exp() / prod))
}
