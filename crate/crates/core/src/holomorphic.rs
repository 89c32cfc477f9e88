//! Functions that can be sampled together with their first two derivatives.

use num_complex::Complex64;

use crate::error::Result;

/// Value, first and second derivative of a function at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

/// An analytic function on (a neighbourhood of) the closed sampling disk.
pub trait Holomorphic: Sync {
    fn jet(&self, z: Complex64) -> Result<Jet>;

    fn value(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.jet(z)?.value)
    }
}

/// Adapter for closed forms given as a closure returning the full jet.
pub struct ClosedForm<F>(pub F);

impl<F> Holomorphic for ClosedForm<F>
where
    F: Fn(Complex64) -> Jet + Sync,
{
    fn jet(&self, z: Complex64) -> Result<Jet> {
        Ok((self.0)(z))
    }
}

impl<T: Holomorphic + ?Sized> Holomorphic for &T {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        (**self).jet(z)
    }
}
