//! Order-raising chain for the convolution operator `B_κ^c f = ϑ_ν * f`.

use num_complex::Complex64;

use super::hypotheses::Part;
use super::report::{Hypothesis, Relation, TheoremId, TheoremReport};
use crate::error::Result;
use crate::gft::{self, CheckOptions, Class, ClassId};
use crate::holomorphic::{ClosedForm, Holomorphic, Jet};
use crate::series::{PowerSeries, DEFAULT_ORDER};
use crate::special::BesselParams;

/// `z/(1-z)` in closed form, convex on the whole disk.
pub fn geometric_closed_form() -> ClosedForm<impl Fn(Complex64) -> Jet + Sync> {
    ClosedForm(|z: Complex64| {
        let w = 1.0 / (1.0 - z);
        Jet { value: z * w, d1: w * w, d2: 2.0 * w * w * w }
    })
}

fn kappa_condition(params: &BesselParams) -> Hypothesis {
    let kappa = params.kappa();
    let rhs = 2f64.max(params.c().norm() / 4.0 + kappa.im * kappa.im / 6.0 + 1.5);
    Hypothesis::new("Re(kappa) >= max{2, |c|/4 + Im(kappa)^2/6 + 3/2}", kappa.re, Relation::AtLeast, rhs)
}

/// Checks `Re(1 + z g''/g') > 0` on the grid.
pub fn check_convex(g: &(impl Holomorphic + ?Sized), opts: &CheckOptions) -> Result<gft::MembershipReport> {
    gft::check_sup_below(ClassId::Custom, |z| Ok(-gft::convex_quantity(g, z)?.re), 0.0, opts)
}

/// Part (a): `f` convex and `B_{κ-1} f ∈ 𝒮*_e` imply `B_κ f ∈ 𝒮*_e`.
/// Part (b): `z f'` convex and `B_{κ-1} f ∈ 𝒦_e` imply `B_κ f ∈ 𝒦_e`.
///
/// Without `verify` only the condition on `κ` is evaluated. With it, the
/// convexity and premise checks become hypotheses (their reports go to
/// `supporting_checks`), and the conclusion is checked when all hold.
/// Convexity is sampled on the truncated series; use
/// [`hyp_bkc_chain_with`] when a closed form is available, since a
/// truncated series is a poor proxy near the unit circle.
pub fn hyp_bkc_chain(
    params: &BesselParams,
    f: &PowerSeries,
    part: Part,
    verify: Option<&CheckOptions>,
) -> Result<TheoremReport> {
    let g = match part {
        Part::A => f.clone(),
        Part::B => f.derivative().times_z(),
    };
    hyp_bkc_chain_with(params, f, &g, part, verify)
}

/// As [`hyp_bkc_chain`], with `convex_witness` standing for `f` (part a)
/// or `z f'` (part b) in the convexity check.
pub fn hyp_bkc_chain_with(
    params: &BesselParams,
    f: &PowerSeries,
    convex_witness: &(impl Holomorphic + ?Sized),
    part: Part,
    verify: Option<&CheckOptions>,
) -> Result<TheoremReport> {
    chain_report(TheoremId::ThmBkcChain, params, f, convex_witness, part, Vec::new(), verify)
}

fn chain_report(
    id: TheoremId,
    params: &BesselParams,
    f: &PowerSeries,
    convex_witness: &(impl Holomorphic + ?Sized),
    part: Part,
    mut hyps: Vec<Hypothesis>,
    verify: Option<&CheckOptions>,
) -> Result<TheoremReport> {
    f.require_normalized()?;
    hyps.push(kappa_condition(params));
    let mut report = TheoremReport::new(id, Some(*params), hyps);
    let Some(opts) = verify else { return Ok(report) };
    if !report.applicable {
        return Ok(report);
    }
    let (class, convex_name, premise_name) = match part {
        Part::A => (Class::Starlike, "f convex", "B_{kappa-1} f in Se"),
        Part::B => (Class::Convex, "z f' convex", "B_{kappa-1} f in Ke"),
    };

    let convexity = check_convex(convex_witness, opts)?;
    report.push_hypothesis(Hypothesis::from_check(convex_name, &convexity));
    report.supporting_checks.push(convexity);

    let lower = f.b_operator(&params.shift_order(-1)?)?;
    let premise = gft::check_class(&lower, class, opts)?;
    report.push_hypothesis(Hypothesis::from_check(premise_name, &premise));
    report.supporting_checks.push(premise);

    if report.applicable {
        report.conclusion_check = Some(gft::check_class(&f.b_operator(params)?, class, opts)?);
    }
    Ok(report)
}

/// Raises the order of `z 𝒥_ν` (`c = 1`) or `z 𝓘_ν` (`c = -1`) one step at
/// a time, `steps` times, starting from `start_nu`. Step `n` checks
/// `z 𝒥_{ν+n-1} ∈ 𝒮*_e ⇒ z 𝒥_{ν+n} ∈ 𝒮*_e` through part (a) with
/// `f = z/(1-z)`, so that `B_κ f = ϑ_ν`.
pub fn bessel_chain(start_nu: f64, steps: usize, c: f64, opts: &CheckOptions) -> Result<Vec<TheoremReport>> {
    let f = PowerSeries::geometric(DEFAULT_ORDER);
    let exact = geometric_closed_form();
    (1..=steps)
        .map(|n| {
            let nu = start_nu + (n - 1) as f64;
            let target = BesselParams::real(nu + 1.0, 1.0, c)?;
            let order = Hypothesis::new("nu >= 1", nu, Relation::AtLeast, 1.0);
            chain_report(TheoremId::CorBkcBessel, &target, &f, &exact, Part::A, vec![order], Some(opts))
        })
        .collect()
}
