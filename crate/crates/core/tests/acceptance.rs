//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each.
//!
//! Runs without the libtest harness so the summary is always printed.

mod common;

use std::f64::consts::TAU;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bessel_exp::cli::{image_curve, Overlay, Quantity, EXP_BOUNDARY_POINTS};
use bessel_exp::gft::{self, CheckOptions, Class};
use bessel_exp::series::{PowerSeries, DEFAULT_ORDER};
use bessel_exp::special::{self, BesselParams, NamedFunction};
use bessel_exp::theorems::{self, ExtremalKind, Part, TheoremReport};
use bessel_exp::Holomorphic;
use common::{closed, disk_points, mp, rel_err, to_c64};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn within(limit: Duration, start: Instant) -> Result<f64, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {:.2} s, limit {} s", t.as_secs_f64(), limit.as_secs()))?;
    Ok(t.as_secs_f64())
}

/// Series values against elementary closed forms at 200 points of the disk.
fn ac1() -> Outcome {
    let start = Instant::now();
    let pts = disk_points(2024, 200, 0.0, 1.0);
    let phi = |nu: f64, b: f64, c: f64| {
        let p = BesselParams::real(nu, b, c).unwrap();
        move |z| special::phi_eval(&p, z, 1e-15).map(|r| r.value)
    };
    let named = |f: NamedFunction, nu: f64| move |z| special::named_family(f, nu.into(), z, 1e-15).map(|r| r.value);
    let times_z = |f: NamedFunction, nu: f64| move |z: Complex64| Ok(z * named(f, nu)(z)?);
    type Series = Box<dyn Fn(Complex64) -> bessel_exp::Result<Complex64>>;
    let cases: Vec<(&str, Series, fn(&rug::Complex) -> rug::Complex)> = vec![
        ("phi_{1,0,2}", Box::new(phi(1.0, 0.0, 2.0)), closed::phi_1_0_2),
        ("phi_{2,0,6}", Box::new(phi(2.0, 0.0, 6.0)), closed::phi_2_0_6),
        ("phi_{3,2,10}", Box::new(phi(3.0, 2.0, 10.0)), closed::phi_3_2_10),
        ("calJ_{1/2}", Box::new(named(NamedFunction::CalJ, 0.5)), closed::cal_j_half),
        ("calI_{1/2}", Box::new(named(NamedFunction::CalI, 0.5)), closed::cal_i_half),
        ("z calJ_{3/2}", Box::new(times_z(NamedFunction::CalJ, 1.5)), closed::z_cal_j_3_2),
        ("z calI_{3/2}", Box::new(times_z(NamedFunction::CalI, 1.5)), closed::z_cal_i_3_2),
        ("z calJ_{5/2}", Box::new(times_z(NamedFunction::CalJ, 2.5)), closed::z_cal_j_5_2),
        ("z calI_{5/2}", Box::new(times_z(NamedFunction::CalI, 2.5)), closed::z_cal_i_5_2),
    ];
    let mut worst = (0.0f64, "", Complex64::new(0.0, 0.0));
    for (name, series, oracle) in &cases {
        for &z in &pts {
            let got = series(z).map_err(|e| format!("{name} at {z}: {e}"))?;
            let err = rel_err(got, to_c64(&oracle(&mp(z))));
            if err > worst.0 {
                worst = (err, name, z);
            }
        }
    }
    ensure(worst.0 <= 1e-11, || format!("{} at {}: relative error {:.2e}", worst.1, worst.2, worst.0))?;
    let t = within(Duration::from_secs(5), start)?;
    Ok(format!("{} functions x {} points, max rel err {:.2e} ({}), {t:.2} s", cases.len(), pts.len(), worst.0, worst.1))
}

fn random_params(rng: &mut ChaCha8Rng) -> BesselParams {
    loop {
        let kappa = Complex64::new(rng.random_range(0.5..12.0), rng.random_range(-3.0..3.0));
        let b = Complex64::new(rng.random_range(-1.0..3.0), rng.random_range(-1.0..1.0));
        let c = Complex64::from_polar(rng.random_range(0.0..10.0), rng.random_range(0.0..TAU));
        if let Ok(p) = BesselParams::new(kappa - (b + 1.0) / 2.0, b, c) {
            return p;
        }
    }
}

/// Residuals of the order recurrence, both differential equations and the
/// operator recurrence over 500 random cases.
fn ac2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d = |p: &BesselParams, z, k| -> Complex64 {
        if k == 0 {
            special::phi_eval(p, z, 1e-15).unwrap().value
        } else {
            special::phi_derivative(p, z, k, 1e-15).unwrap().value
        }
    };
    let mut worst = [0.0f64; 4];
    for _ in 0..500 {
        let p = random_params(&mut rng);
        let z = Complex64::from_polar(rng.random_range(0.0f64..1.0).sqrt(), rng.random_range(0.0..TAU));
        let (k, c) = (p.kappa(), p.c());
        let (f0, f1, f2, f3) = (d(&p, z, 0), d(&p, z, 1), d(&p, z, 2), d(&p, z, 3));

        let recurrence = 4.0 * k * f1 + c * d(&p.shift_order(1).unwrap(), z, 0);
        let ode = 4.0 * z * z * f2 + 4.0 * k * z * f1 + c * z * f0;
        // p = -4κφ'/c; the equation is linear, so the scale is dropped when c = 0
        let scale = if c.norm() > 0.0 { -4.0 * k / c } else { Complex64::new(1.0, 0.0) };
        let shifted = (4.0 * z * z * f3 + 4.0 * (k + 1.0) * z * f2 + c * z * f1) * scale / scale.norm().max(1.0);

        let mut coeffs = vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        coeffs.extend((0..10).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))));
        let f = PowerSeries::new(coeffs).unwrap();
        let pk = BesselParams::new(p.nu() + 1.0, p.b(), p.c()).unwrap();
        let (lower, upper) = (f.b_operator(&pk).unwrap(), f.b_operator(&pk.shift_order(1).unwrap()).unwrap());
        let kk = pk.kappa();
        let up = upper.jet(z).unwrap();
        let b1 = z * up.d1 - (kk * lower.value(z).unwrap() - (kk - 1.0) * up.value);

        for (w, r) in worst.iter_mut().zip([recurrence, ode, shifted, b1]) {
            *w = w.max(r.norm());
        }
    }
    let max = worst.iter().copied().fold(0.0, f64::max);
    ensure(max < 1e-10, || format!("residuals {worst:?}"))?;
    let t = within(Duration::from_secs(10), start)?;
    Ok(format!(
        "500 cases; max residuals: recurrence {:.1e}, ode {:.1e}, shifted ode {:.1e}, operator {:.1e}; {t:.2} s",
        worst[0], worst[1], worst[2], worst[3]
    ))
}

/// Sampled `φ ≺ e^z` for the five figure parameter sets, and image curves
/// inside the boundary of `exp(𝔻)`.
fn ac3() -> Outcome {
    let opts = CheckOptions::default();
    let boundary = Overlay::Exp.boundary(EXP_BOUNDARY_POINTS);
    let mut margins = Vec::new();
    for (c, kappa) in [(2.0, 1.5), (6.0, 2.5), (10.0, 4.5), (30.0, 8.5), (60.0, 16.0)] {
        let p = BesselParams::from_kappa(kappa.into(), c.into()).unwrap();
        let phi = PowerSeries::phi(&p, DEFAULT_ORDER).unwrap();
        let report = gft::check_subordinate_exp(|z| phi.value(z), &opts).unwrap();
        ensure(report.passed() && report.margin > 1e-3, || format!("(c, kappa) = ({c}, {kappa}): {:?}, margin {:.3e}", report.verdict, report.margin))?;
        let curve = image_curve(&phi, Quantity::Value, 0.999, 2048).unwrap();
        let outside = curve.iter().filter(|(_, w)| !Overlay::Exp.contains(*w, &boundary)).count();
        ensure(outside == 0, || format!("(c, kappa) = ({c}, {kappa}): {outside} curve points outside"))?;
        margins.push(format!("{:.3}", report.margin));
    }
    Ok(format!("margins [{}], all curves inside", margins.join(", ")))
}

/// `ϑ_{-1/2,1,1}` and `ϑ_{-3/2,1,1}` fail; `ϑ_{-5/2,1,±1}` pass through the
/// linear criterion with `α = 1`.
fn ac4() -> Outcome {
    let opts = CheckOptions::default();
    let f = PowerSeries::geometric(DEFAULT_ORDER);
    let mut detail = Vec::new();
    for nu in [-0.5, -1.5] {
        let g = PowerSeries::vartheta(&BesselParams::real(nu, 1.0, 1.0).unwrap(), DEFAULT_ORDER).unwrap();
        let r = gft::check_class(&g, Class::Starlike, &opts).unwrap();
        ensure(r.failed(), || format!("vartheta_{{{nu},1,1}}: expected fail, got {:?}", r.verdict))?;
        detail.push(format!("nu={nu} fails (sup {:.3})", r.sup_value));
    }
    for c in [1.0, -1.0] {
        let p = BesselParams::real(-2.5, 1.0, c).unwrap();
        let r = theorems::example_linear_check(&p, &f, 1.0, &opts).unwrap();
        let premise = &r.supporting_checks[0];
        ensure(r.applicable && premise.margin > 1e-3, || format!("c={c}: premise margin {:.3e}", premise.margin))?;
        ensure(r.conclusion_passed() == Some(true), || format!("c={c}: conclusion not confirmed"))?;
        detail.push(format!("nu=-5/2, c={c} passes (premise margin {:.4})", premise.margin));
    }
    Ok(detail.join("; "))
}

/// Extremal locations and values of the boundary functions.
fn ac5() -> Outcome {
    let mut worst = (0.0f64, 0.0f64);
    for m in [1.0, 1.5, 2.0, 5.0] {
        for kind in [ExtremalKind::G1, ExtremalKind::Ell2, ExtremalKind::G2] {
            let curve = theorems::extremal_curve(kind, m).unwrap();
            ensure(curve.location_error() < 1e-6, || format!("{kind:?}, m={m}: theta* = {}", curve.theta_star))?;
            ensure(curve.value_error() < 1e-10, || format!("{kind:?}, m={m}: value error {:.2e}", curve.value_error()))?;
            worst = (worst.0.max(curve.location_error()), worst.1.max(curve.value_error()));
        }
    }
    Ok(format!("12 curves; max location error {:.1e}, max value error {:.1e}", worst.0, worst.1))
}

/// Random `(κ, c)` with `|κ| ≤ 20`, `|c| ≤ 10`, two thirds of them drawn near
/// `κ = 2` or `κ = 3` with small `|c|` where the conditions are tight, and a
/// quarter of them real.
fn sweep_params(rng: &mut ChaCha8Rng) -> BesselParams {
    loop {
        let real = rng.random_bool(0.25);
        let im = |rng: &mut ChaCha8Rng, s: f64| if real { 0.0 } else { rng.random_range(-s..s) };
        let (kappa, c_max) = match rng.random_range(0..3) {
            0 => (Complex64::new(rng.random_range(1.4..2.8), im(rng, 0.5)), 5.0),
            1 => (Complex64::new(rng.random_range(2.4..3.8), im(rng, 0.5)), 5.0),
            _ => (Complex64::from_polar(rng.random_range(0.0..20.0), rng.random_range(0.0..TAU)), 10.0),
        };
        let kappa = if real { Complex64::new(kappa.re, 0.0) } else { kappa };
        let c_abs = rng.random_range(0.0..c_max);
        let c = if real {
            Complex64::new(if rng.random_bool(0.5) { c_abs } else { -c_abs }, 0.0)
        } else {
            Complex64::from_polar(c_abs, rng.random_range(0.0..TAU))
        };
        let b: f64 = rng.random_range(0.0..2.0);
        if kappa.norm() <= 20.0 {
            if let Ok(p) = BesselParams::new(kappa - (b + 1.0) / 2.0, b.into(), c) {
                return p;
            }
        }
    }
}

/// Whenever a hypothesis checker applies, the sampled conclusion passes.
fn ac6() -> Outcome {
    let start = Instant::now();
    let opts = CheckOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240);
    let geometric = PowerSeries::geometric(DEFAULT_ORDER);
    let witness = theorems::geometric_closed_form();
    let names = ["Pe", "Ke", "Se", "omega", "chain(a)"];
    let mut applicable = [0usize; 5];
    for i in 0..200 {
        let p = sweep_params(&mut rng);
        let mut reports: Vec<TheoremReport> = vec![
            theorems::hyp_pe(&p, Some(&opts)).unwrap(),
            theorems::hyp_ke(&p, Some(&opts)).unwrap(),
            theorems::hyp_se(&p, Some(&opts)).unwrap(),
            theorems::hyp_omega_se(&p, Some(&opts)).unwrap(),
        ];
        reports.push(theorems::hyp_bkc_chain_with(&p, &geometric, &witness, Part::A, Some(&opts)).unwrap());
        for (j, r) in reports.iter().enumerate() {
            if !r.applicable {
                continue;
            }
            applicable[j] += 1;
            let all_pass = r.conclusion_passed() == Some(true) && r.supporting_checks.iter().all(|c| c.passed());
            ensure(all_pass, || {
                format!(
                    "triple {i} (kappa={}, c={}): {} applicable but conclusion {:?}",
                    p.kappa(),
                    p.c(),
                    names[j],
                    r.conclusion_check.as_ref().map(|c| (c.verdict, c.sup_value))
                )
            })?;
        }
    }
    ensure(applicable.iter().all(|&n| n > 0), || format!("a theorem never applied: {applicable:?}"))?;
    let t = within(Duration::from_secs(120), start)?;
    let counts: Vec<String> = names.iter().zip(applicable).map(|(n, k)| format!("{n} {k}")).collect();
    Ok(format!("200 triples, no counterexample; applicable: {}; {t:.1} s", counts.join(", ")))
}

/// `z 𝒥_{3/2+n} ∈ 𝒮*_e` for `n = 1..5` through the order-raising chain.
fn ac7() -> Outcome {
    let reports = theorems::bessel_chain(1.5, 5, 1.0, &CheckOptions::default()).unwrap();
    let mut sups = Vec::new();
    for (n, r) in reports.iter().enumerate() {
        let ok = r.applicable && r.conclusion_passed() == Some(true);
        ensure(ok, || format!("step {}: applicable {}, conclusion {:?}", n + 1, r.applicable, r.conclusion_passed()))?;
        sups.push(format!("{:.4}", r.conclusion_check.as_ref().unwrap().sup_value));
    }
    Ok(format!("nu = 5/2 .. 13/2 pass; sup |log zf'/f| = [{}]", sups.join(", ")))
}

/// Libera images of `-6(𝒥_{1/2} - 1)` and `z 𝒥_{3/2}`.
fn ac8() -> Outcome {
    let opts = CheckOptions::default();
    let convex = PowerSeries::phi_normalized(&BesselParams::real(0.5, 1.0, 1.0).unwrap(), DEFAULT_ORDER).unwrap().libera().unwrap();
    let starlike = PowerSeries::vartheta(&BesselParams::real(1.5, 1.0, 1.0).unwrap(), DEFAULT_ORDER).unwrap().libera().unwrap();
    for z in disk_points(88, 20, 0.01, 1.0) {
        let e1 = rel_err(convex.eval(z).unwrap(), to_c64(&closed::libera_cal_j_half(&mp(z))));
        let e2 = rel_err(starlike.eval(z).unwrap(), to_c64(&closed::libera_z_cal_j_3_2(&mp(z))));
        ensure(e1 < 1e-12 && e2 < 1e-12, || format!("series and closed form differ at {z}: {e1:.2e}, {e2:.2e}"))?;
    }
    let ke = gft::check_class(&convex, Class::Convex, &opts).unwrap();
    let se = gft::check_class(&starlike, Class::Starlike, &opts).unwrap();
    ensure(ke.passed() && ke.margin > 1e-3, || format!("Ke: {:?}, margin {:.3e}", ke.verdict, ke.margin))?;
    ensure(se.passed() && se.margin > 1e-3, || format!("Se: {:?}, margin {:.3e}", se.verdict, se.margin))?;
    Ok(format!("Ke margin {:.4}, Se margin {:.4}", ke.margin, se.margin))
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 8] = [
        ("AC1", "closed-form identities", ac1),
        ("AC2", "recurrence and ODE residuals", ac2),
        ("AC3", "Pe parameter sets and image curves", ac3),
        ("AC4", "counterexamples and linear criterion", ac4),
        ("AC5", "extremal boundary functions", ac5),
        ("AC6", "theorem soundness sweep", ac6),
        ("AC7", "order-raising chain", ac7),
        ("AC8", "Libera images", ac8),
    ];
    let mut failures = 0;
    for (id, title, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] {id} {title}: {detail}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
