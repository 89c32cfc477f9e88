//! Hypothesis arithmetic for the sufficient conditions, as JSON.

use bessel_exp::gft::{CheckOptions, Class};
use bessel_exp::theorems::{self, Family, Part};
use bessel_exp::BesselParams;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::default();

    let pe = theorems::hyp_pe(&BesselParams::from_kappa(16.0.into(), 60.0.into())?, Some(&opts))?;
    println!("{}", serde_json::to_string_pretty(&pe)?);

    let ke = theorems::hyp_ke(&BesselParams::from_kappa(5.0.into(), 1.0.into())?, None)?;
    for h in &ke.hypotheses {
        println!("{:<60} holds={} slack={:+.5}", h.name, h.holds, h.slack);
    }

    for nu in [-2.5, 0.5, 1.5] {
        let a = theorems::hyp_corollary(Complex64::new(nu, 0.0), Family::Bessel, Part::A, None)?;
        let b = theorems::hyp_corollary(Complex64::new(nu, 0.0), Family::Bessel, Part::B, None)?;
        println!("nu = {nu:>4}: convex corollary {}, starlike corollary {}", a.applicable, b.applicable);
    }

    let omega = theorems::hyp_omega_se(&BesselParams::real(1.5, 1.0, 1.0)?, Some(&opts))?;
    println!("omega theorem applicable {}, conclusion {:?}", omega.applicable, omega.conclusion_passed());
    let libera = theorems::hyp_libera(&BesselParams::real(1.5, 1.0, 1.0)?, Class::Starlike, Some(&opts))?;
    println!("Libera image of z calJ_3/2 starlike: {:?}", libera.conclusion_passed());
    Ok(())
}
