//! Sampled membership tests for `𝒫_e`, `𝒮*_e` and `𝒦_e`.
//!
//! "For all `z` in the disk" is replaced by dense sampling of concentric
//! circles up to `r = 0.999`, with golden-section refinement around the
//! worst sample. For analytic quantities the maximum principle makes the
//! outermost circle decisive, and every report records the per-circle
//! suprema so that this can be checked. The verdicts are numerical evidence,
//! not certificates.

mod checks;
mod grid;
mod report;

pub use checks::{
    check_class, check_quarter_bound, check_sup_below, check_subordinate_exp, convex_quantity,
    log_bound_lemma_check, starlike_quantity, CheckOptions, Class, DEFAULT_GUARD,
    DENOMINATOR_FLOOR, MONOTONE_SLACK,
};
pub use grid::DiskGrid;
pub use report::{ClassId, MembershipReport, Verdict};
