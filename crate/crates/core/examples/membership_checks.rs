//! Sampled membership in 𝒫_e, 𝒮*_e and 𝒦_e.

use bessel_exp::gft::{self, CheckOptions, Class};
use bessel_exp::series::{PowerSeries, DEFAULT_ORDER};
use bessel_exp::{BesselParams, Holomorphic};

fn main() -> bessel_exp::Result<()> {
    let opts = CheckOptions::default();

    for (c, kappa) in [(2.0, 1.5), (6.0, 2.5), (60.0, 16.0)] {
        let phi = PowerSeries::phi(&BesselParams::from_kappa(kappa.into(), c.into())?, DEFAULT_ORDER)?;
        let r = gft::check_subordinate_exp(|z| phi.value(z), &opts)?;
        println!("phi with c={c:>4}, kappa={kappa:>4}: {:?}, sup |log phi| = {:.4}", r.verdict, r.sup_value);
    }

    for nu in [1.5, 0.5, -0.5, -2.5] {
        let f = PowerSeries::vartheta(&BesselParams::real(nu, 1.0, 1.0)?, DEFAULT_ORDER)?;
        let r = gft::check_class(&f, Class::Starlike, &opts)?;
        println!(
            "z calJ_{nu:<4} starlike: {:?}, sup {:.4} at {:.4}",
            r.verdict, r.sup_value, r.witness
        );
    }

    let g = PowerSeries::phi_normalized(&BesselParams::real(0.5, 1.0, 1.0)?, DEFAULT_ORDER)?;
    let r = gft::check_class(&g, Class::Convex, &opts)?;
    println!("-6(calJ_1/2 - 1) convex: {:?}, margin {:.4}", r.verdict, r.margin);
    println!("per-circle suprema: {:?}", r.circle_sups);
    Ok(())
}
