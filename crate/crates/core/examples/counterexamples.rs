//! Orders where the general conditions fail, decided directly or through
//! the linear and product criteria.

use bessel_exp::gft::{self, CheckOptions, Class};
use bessel_exp::series::{PowerSeries, DEFAULT_ORDER};
use bessel_exp::theorems;
use bessel_exp::BesselParams;

fn main() -> bessel_exp::Result<()> {
    let opts = CheckOptions::default();
    let f = PowerSeries::geometric(DEFAULT_ORDER);

    for nu in [-0.5, -1.5, -2.5] {
        let p = BesselParams::real(nu, 1.0, 1.0)?;
        let direct = gft::check_class(&PowerSeries::vartheta(&p, DEFAULT_ORDER)?, Class::Starlike, &opts)?;
        let se = theorems::hyp_se(&p, None)?;
        println!(
            "nu={nu}: general condition applies: {}, sampled check {:?} (sup {:.3} at {:.3})",
            se.applicable, direct.verdict, direct.sup_value, direct.witness
        );
    }

    for c in [1.0, -1.0] {
        let p = BesselParams::real(-2.5, 1.0, c)?;
        let r = theorems::example_linear_check(&p, &f, 1.0, &opts)?;
        let premise = &r.supporting_checks[0];
        println!(
            "nu=-5/2, c={c}: sup |z f''/f'| = {:.4} < 1 - 1/e = {:.4}, so starlike: {:?}",
            premise.sup_value,
            premise.threshold,
            r.conclusion_passed()
        );
    }

    for nu in [1.5, -0.5] {
        let r = theorems::example_product_check(&BesselParams::real(nu, 1.0, 1.0)?, &f, &opts)?;
        let premise = &r.supporting_checks[0];
        println!("product criterion at nu={nu}: premise {:?} (sup {:.4})", premise.verdict, premise.sup_value);
    }
    Ok(())
}
