use num_complex::Complex64;
use rayon::prelude::*;

use super::grid::DiskGrid;
use super::report::{ClassId, MembershipReport, Verdict};
use crate::error::{Error, Result};
use crate::holomorphic::Holomorphic;
use crate::optimize::golden_section_max;

/// Default width of the band between `Pass` and `Inconclusive`.
pub const DEFAULT_GUARD: f64 = 1e-6;

/// Slack allowed when comparing circle suprema for monotonicity in `r`.
pub const MONOTONE_SLACK: f64 = 1e-9;

/// Denominators at or below this modulus count as vanishing.
pub const DENOMINATOR_FLOOR: f64 = 1e-14;

/// Grid plus guard band shared by all sampled checks.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOptions {
    pub grid: DiskGrid,
    pub guard: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self { grid: DiskGrid::default(), guard: DEFAULT_GUARD }
    }
}

impl CheckOptions {
    pub fn with_grid(grid: DiskGrid) -> Self {
        Self { grid, guard: DEFAULT_GUARD }
    }
}

/// Target class for [`check_class`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    Starlike,
    Convex,
}

/// `z f'(z) / f(z)`, with the normalized limit 1 at the origin.
pub fn starlike_quantity(f: &(impl Holomorphic + ?Sized), z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let jet = f.jet(z)?;
    if jet.value.norm() <= DENOMINATOR_FLOOR {
        return Err(Error::ZeroDenominator(z));
    }
    Ok(z * jet.d1 / jet.value)
}

/// `1 + z f''(z) / f'(z)`.
pub fn convex_quantity(f: &(impl Holomorphic + ?Sized), z: Complex64) -> Result<Complex64> {
    let jet = f.jet(z)?;
    if jet.d1.norm() <= DENOMINATOR_FLOOR {
        return Err(Error::ZeroDenominator(z));
    }
    Ok(1.0 + z * jet.d2 / jet.d1)
}

/// Checks `sup |log w| < 1` over the grid, i.e. `w ≺ e^z` for `w(0) = 1`.
///
/// A sample with `w = 0`, `Re w ≤ 0` or a vanishing denominator inside `w`
/// yields `|log w| ≥ π/2` (or infinity) and hence a `Fail`.
pub fn check_subordinate_exp<W>(w: W, opts: &CheckOptions) -> Result<MembershipReport>
where
    W: Fn(Complex64) -> Result<Complex64> + Sync,
{
    check_subordinate_exp_as(ClassId::Pe, w, opts)
}

fn check_subordinate_exp_as<W>(class: ClassId, w: W, opts: &CheckOptions) -> Result<MembershipReport>
where
    W: Fn(Complex64) -> Result<Complex64> + Sync,
{
    let w0 = w(Complex64::new(0.0, 0.0))?;
    if (w0 - 1.0).norm() > 1e-9 {
        return Err(Error::InvalidParams(format!("w(0) = {w0}, expected 1")));
    }
    check_sup_below(
        class,
        |z| {
            let v = w(z)?;
            if v == Complex64::new(0.0, 0.0) {
                return Ok(f64::INFINITY);
            }
            Ok(v.ln().norm())
        },
        1.0,
        opts,
    )
}

/// Exponential starlikeness or convexity of a normalized `f`.
pub fn check_class(
    f: &(impl Holomorphic + ?Sized),
    class: Class,
    opts: &CheckOptions,
) -> Result<MembershipReport> {
    let origin = f.jet(Complex64::new(0.0, 0.0))?;
    if origin.value.norm() > 1e-12 || (origin.d1 - 1.0).norm() > 1e-12 {
        return Err(Error::NotNormalized);
    }
    match class {
        Class::Starlike => check_subordinate_exp_as(ClassId::Se, |z| starlike_quantity(f, z), opts),
        Class::Convex => check_subordinate_exp_as(ClassId::Ke, |z| convex_quantity(f, z), opts),
    }
}

/// Checks `sup |p| < 1/4` for `p(0) = 0`.
pub fn check_quarter_bound<P>(p: P, opts: &CheckOptions) -> Result<MembershipReport>
where
    P: Fn(Complex64) -> Result<Complex64> + Sync,
{
    check_sup_below(ClassId::BoundQuarter, |z| Ok(p(z)?.norm()), 0.25, opts)
}

/// `|Log(1 + w)| ≤ 3|w|/2`, valid for `|w| < 1/2`.
pub fn log_bound_lemma_check(w: Complex64) -> Result<bool> {
    if !(w.norm() < 0.5) {
        return Err(Error::OutOfDomain { what: "|w| for the log bound", value: w.norm() });
    }
    Ok((1.0 + w).ln().norm() <= 1.5 * w.norm())
}

/// Generic sampled bound `sup_z metric(z) < threshold`.
///
/// `metric` should be the modulus or real part of an analytic function, so
/// its circle suprema grow with the radius. A sample whose evaluation hits a
/// vanishing denominator counts as `+∞`.
pub fn check_sup_below<M>(
    class: ClassId,
    metric: M,
    threshold: f64,
    opts: &CheckOptions,
) -> Result<MembershipReport>
where
    M: Fn(Complex64) -> Result<f64> + Sync,
{
    let grid = &opts.grid;
    let metric = |z: Complex64| -> Result<f64> {
        match metric(z) {
            Ok(v) if v.is_nan() => Err(Error::NonFinite(z)),
            Ok(v) => Ok(v),
            Err(Error::ZeroDenominator(_)) => Ok(f64::INFINITY),
            Err(e) => Err(e),
        }
    };

    let mut circle_sups = Vec::with_capacity(grid.radii().len());
    let mut best = (f64::NEG_INFINITY, 0usize, 0usize);
    for (circle, _) in grid.radii().iter().enumerate() {
        let (value, k) = (0..grid.angles_per_circle())
            .into_par_iter()
            .map(|k| metric(grid.point(circle, k)).map(|v| (v, k)))
            .try_reduce(
                || (f64::NEG_INFINITY, usize::MAX),
                |a, b| Ok(if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a }),
            )?;
        circle_sups.push(value);
        if value >= best.0 {
            best = (value, circle, k);
        }
    }

    let (mut sup, circle, k) = best;
    let mut witness = grid.point(circle, k);
    if sup.is_finite() {
        let r = grid.radii()[circle];
        let theta = grid.angle(k);
        let h = grid.step();
        let on_circle = |t: f64| metric(Complex64::from_polar(r, t)).unwrap_or(f64::INFINITY);
        let refined = golden_section_max(on_circle, theta - h, theta + h, 1e-12);
        if refined.value > sup {
            sup = refined.value;
            witness = Complex64::from_polar(r, refined.x);
            circle_sups[circle] = sup;
        }
    }

    let monotone = circle_sups.windows(2).all(|w| w[0] <= w[1] + MONOTONE_SLACK);
    let verdict = if sup >= threshold {
        Verdict::Fail
    } else if sup < threshold - opts.guard && monotone {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    Ok(MembershipReport {
        class_id: class,
        verdict,
        sup_value: sup,
        witness,
        margin: threshold - sup,
        threshold,
        circle_sups,
        grid: grid.clone(),
    })
}
