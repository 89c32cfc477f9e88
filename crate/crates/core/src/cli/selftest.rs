//! A quick battery of consistency checks runnable from the binary.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;

use super::{Cli, CliResult, EXIT_FAIL, EXIT_PASS};
use crate::error::Result;
use crate::gft::{self, CheckOptions, Class, DiskGrid};
use crate::series::{PowerSeries, DEFAULT_ORDER};
use crate::special::{self, BesselParams, NamedFunction};
use crate::theorems::{self, ExtremalKind};

#[derive(Serialize)]
struct Item {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn item(name: &'static str, outcome: Result<(bool, String)>) -> Item {
    match outcome {
        Ok((passed, detail)) => Item { name, passed, detail },
        Err(e) => Item { name, passed: false, detail: format!("error: {e}") },
    }
}

pub(super) fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let opts = if cli.grid_radii.is_some() || cli.grid_angles.is_some() {
        cli.check_options()?
    } else {
        CheckOptions::with_grid(DiskGrid::new(DiskGrid::DEFAULT_RADII.to_vec(), 1024)?)
    };
    let tol = cli.tol;
    let items = vec![
        item("gamma(1/2)^2 = pi", (|| {
            let g = special::gamma(Complex64::new(0.5, 0.0))?;
            let err = (g * g - PI).norm();
            Ok((err < 1e-13, format!("error {err:.2e}")))
        })()),
        item("calJ_{1/2}(z) = sin(sqrt z)/sqrt z", (|| {
            let z = Complex64::new(0.49, 0.0);
            let v = special::named_family(NamedFunction::CalJ, Complex64::new(0.5, 0.0), z, tol)?.value;
            let err = (v - 0.7f64.sin() / 0.7).norm();
            Ok((err < 1e-12, format!("error {err:.2e}")))
        })()),
        item("4 kappa phi' = -c phi_{nu+1}", (|| {
            let p = BesselParams::new(Complex64::new(0.3, 0.2), 1.5.into(), Complex64::new(2.0, -1.0))?;
            let z = Complex64::new(0.4, -0.6);
            let lhs = 4.0 * p.kappa() * special::phi_derivative(&p, z, 1, tol)?.value;
            let rhs = -p.c() * special::phi_eval(&p.shift_order(1)?, z, tol)?.value;
            let err = (lhs - rhs).norm();
            Ok((err < 1e-10, format!("residual {err:.2e}")))
        })()),
        item("phi_{1,0,2} in Pe", (|| {
            let phi = PowerSeries::phi(&BesselParams::real(1.0, 0.0, 2.0)?, DEFAULT_ORDER)?;
            let r = gft::check_subordinate_exp(|z| crate::Holomorphic::value(&phi, z), &opts)?;
            Ok((r.passed(), format!("sup {:.6}", r.sup_value)))
        })()),
        item("vartheta_{-1/2,1,1} not in Se", (|| {
            let f = PowerSeries::vartheta(&BesselParams::real(-0.5, 1.0, 1.0)?, DEFAULT_ORDER)?;
            let r = gft::check_class(&f, Class::Starlike, &opts)?;
            Ok((r.failed(), format!("sup {:.6}", r.sup_value)))
        })()),
        item("vartheta_{-5/2,1,1} in Se via the linear criterion", (|| {
            let p = BesselParams::real(-2.5, 1.0, 1.0)?;
            let r = theorems::example_linear_check(&p, &PowerSeries::geometric(DEFAULT_ORDER), 1.0, &opts)?;
            Ok((r.applicable && r.conclusion_passed() == Some(true), format!("premise margin {:.6}", r.supporting_checks[0].margin)))
        })()),
        item("g1 minimum at pi", (|| {
            let c = theorems::extremal_curve(ExtremalKind::G1, 1.0)?;
            Ok((c.location_error() < 1e-6 && c.value_error() < 1e-10, format!("theta* {:.10}", c.theta_star)))
        })()),
        item("z calJ_{5/2} in Se from z calJ_{3/2}", (|| {
            let r = theorems::bessel_chain(1.5, 1, 1.0, &opts)?;
            Ok((r[0].applicable && r[0].conclusion_passed() == Some(true), format!("applicable {}", r[0].applicable)))
        })()),
    ];
    let all = items.iter().all(|i| i.passed);
    cli.emit(out, &items, || {
        items
            .iter()
            .map(|i| format!("[{}] {} ({})\n", if i.passed { "PASS" } else { "FAIL" }, i.name, i.detail))
            .collect()
    })?;
    Ok(if all { EXIT_PASS } else { EXIT_FAIL })
}
