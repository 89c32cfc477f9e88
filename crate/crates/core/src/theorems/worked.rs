//! Sufficient conditions for `B_κ^c f ∈ 𝒮*_e` built from the linear and
//! product combinations of `z g'/g` and `1 + z g''/g'`.

use std::f64::consts::E;

use super::constants;
use super::report::{Hypothesis, Relation, TheoremId, TheoremReport};
use crate::error::{Error, Result};
use crate::gft::{self, CheckOptions, Class, ClassId};
use crate::series::PowerSeries;
use crate::special::BesselParams;

fn worked_check(
    id: TheoremId,
    params: &BesselParams,
    g: &PowerSeries,
    mut hyps: Vec<Hypothesis>,
    premise_name: &str,
    premise: gft::MembershipReport,
    opts: &CheckOptions,
) -> Result<TheoremReport> {
    hyps.push(Hypothesis::from_check(premise_name, &premise));
    let mut report = TheoremReport::new(id, Some(*params), hyps);
    report.supporting_checks.push(premise);
    if report.applicable {
        report.conclusion_check = Some(gft::check_class(g, Class::Starlike, opts)?);
    }
    Ok(report)
}

/// `|(1-α) z g'/g + α (1 + z g''/g') - 1| < α - 1/e` for `g = B_κ^c f`
/// implies `g ∈ 𝒮*_e`. The premise report is the only supporting check;
/// the conclusion is checked whenever the premise passes.
pub fn example_linear_check(
    params: &BesselParams,
    f: &PowerSeries,
    alpha: f64,
    opts: &CheckOptions,
) -> Result<TheoremReport> {
    if !(alpha > 1.0 / E) || !alpha.is_finite() {
        return Err(Error::OutOfDomain { what: "alpha (must exceed 1/e)", value: alpha });
    }
    let g = f.b_operator(params)?;
    let threshold = constants::linear_threshold(alpha);
    let premise = gft::check_sup_below(
        ClassId::Custom,
        |z| {
            let u = gft::starlike_quantity(&g, z)?;
            let v = gft::convex_quantity(&g, z)?;
            Ok(((1.0 - alpha) * u + alpha * v - 1.0).norm())
        },
        threshold,
        opts,
    )?;
    let hyps = vec![Hypothesis::new("alpha > 1/e", alpha, Relation::Above, 1.0 / E)];
    worked_check(TheoremId::ExLinear, params, &g, hyps, "|(1-a)u + a v - 1| < a - 1/e", premise, opts)
}

/// `|z g'/g · (1 + z g''/g') - 1| < 1/e - 1/e² + 1` for `g = B_κ^c f`
/// implies `g ∈ 𝒮*_e`.
pub fn example_product_check(params: &BesselParams, f: &PowerSeries, opts: &CheckOptions) -> Result<TheoremReport> {
    let g = f.b_operator(params)?;
    let premise = gft::check_sup_below(
        ClassId::Custom,
        |z| Ok((gft::starlike_quantity(&g, z)? * gft::convex_quantity(&g, z)? - 1.0).norm()),
        constants::product_threshold(),
        opts,
    )?;
    worked_check(TheoremId::ExProduct, params, &g, Vec::new(), "|u v - 1| < 1/e - 1/e^2 + 1", premise, opts)
}
