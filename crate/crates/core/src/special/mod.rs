//! The generalized Bessel function family and the supporting Gamma and
//! Pochhammer routines.

mod bessel;
mod gamma;
mod params;

pub use bessel::{
    named_family, omega_eval, phi_derivative, phi_eval, phi_eval_capped, vartheta_eval,
    EvalResult, NamedFunction, DEFAULT_MAX_TERMS, MIN_TOLERANCE,
};
pub use gamma::{gamma, is_near_nonpositive_integer, pochhammer, POLE_TOLERANCE};
pub use params::BesselParams;
