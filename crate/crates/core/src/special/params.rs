use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::is_near_nonpositive_integer;
use crate::error::{Error, Result};

/// The parameter triple `(ν, b, c)` of the generalized Bessel function.
///
/// The derived quantity `κ = ν + (b+1)/2` is recomputed on demand and must
/// stay away from the poles `0, -1, -2, ...` of the rising factorial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesselParams {
    nu: Complex64,
    b: Complex64,
    c: Complex64,
}

#[derive(Deserialize)]
struct RawParams {
    nu: Complex64,
    b: Complex64,
    c: Complex64,
}

impl<'de> Deserialize<'de> for BesselParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawParams::deserialize(d)?;
        BesselParams::new(raw.nu, raw.b, raw.c).map_err(serde::de::Error::custom)
    }
}

impl BesselParams {
    pub fn new(nu: Complex64, b: Complex64, c: Complex64) -> Result<Self> {
        for (name, v) in [("nu", nu), ("b", b), ("c", c)] {
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::InvalidParams(format!("{name} = {v} is not finite")));
            }
        }
        let params = Self { nu, b, c };
        let kappa = params.kappa();
        if is_near_nonpositive_integer(kappa) {
            return Err(Error::InvalidParams(format!(
                "kappa = {kappa} is a non-positive integer"
            )));
        }
        Ok(params)
    }

    /// Real-valued convenience constructor.
    pub fn real(nu: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(nu.into(), b.into(), c.into())
    }

    /// Parameters with the given `κ` and `c`, using `b = 1` (so `ν = κ - 1`).
    pub fn from_kappa(kappa: Complex64, c: Complex64) -> Result<Self> {
        Self::new(kappa - 1.0, Complex64::new(1.0, 0.0), c)
    }

    pub fn nu(&self) -> Complex64 {
        self.nu
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn kappa(&self) -> Complex64 {
        self.nu + (self.b + 1.0) / 2.0
    }

    /// Same `b` and `c`, order `ν + k` (hence `κ + k`).
    pub fn shift_order(&self, k: i32) -> Result<Self> {
        Self::new(self.nu + k as f64, self.b, self.c)
    }
}
