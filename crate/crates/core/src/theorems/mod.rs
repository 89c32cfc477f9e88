//! Hypothesis checkers for the membership theorems, with optional sampled
//! confirmation of their conclusions, and the boundary extremal functions
//! used to establish them.
//!
//! Hypotheses are plain arithmetic and exact up to [`EQUALITY_TOL`]; the
//! conclusion checks inherit the heuristic nature of [`crate::gft`].

mod chain;
mod constants;
mod extremal;
mod hypotheses;
mod report;
mod worked;

pub use chain::{bessel_chain, check_convex, geometric_closed_form, hyp_bkc_chain, hyp_bkc_chain_with};
pub use constants::*;
pub use extremal::{extremal_curve, ExtremalCurve, ExtremalKind, EXTREMAL_SAMPLES};
pub use hypotheses::{
    hyp_corollary, hyp_ke, hyp_libera, hyp_omega_se, hyp_pe, hyp_se, omega_normalized_series, Family, Part,
};
pub use report::{Hypothesis, Relation, TheoremId, TheoremReport, EQUALITY_TOL};
pub use worked::{example_linear_check, example_product_check};
