//! Evaluates φ, ϑ, ω and the named Bessel functions at a few points.

use bessel_exp::special::{self, BesselParams, NamedFunction};
use num_complex::Complex64;

fn main() -> bessel_exp::Result<()> {
    let params = BesselParams::real(1.0, 0.0, 2.0)?;
    for z in [Complex64::new(0.5, 0.0), Complex64::new(0.3, 0.6), Complex64::new(-0.9, 0.1)] {
        let r = special::phi_eval(&params, z, 1e-14)?;
        let exact = (2.0 * z).sqrt().sin() / (2.0 * z).sqrt();
        println!(
            "phi_{{1,0,2}}({z}) = {:.15}  ({} terms, tail <= {:.1e}, closed form {:.15})",
            r.value, r.terms_used, r.tail_bound, exact
        );
    }

    let z = Complex64::new(0.7, 0.0);
    for name in NamedFunction::ALL {
        let v = special::named_family(name, Complex64::new(0.5, 0.0), z, 1e-14)?;
        println!("{:>6}_(1/2)(0.7) = {:.15}", name.name(), v.value.re);
    }

    // ω is multivalued for non-integer ν; the cut can be turned away from z
    let p = BesselParams::real(0.5, 1.0, 1.0)?;
    let z = Complex64::new(-1.0, 0.0);
    match special::omega_eval(&p, z, 0.0, 1e-14) {
        Ok(v) => println!("J_(1/2)(-1) = {}", v.value),
        Err(e) => println!("J_(1/2)(-1) on the principal cut: {e}"),
    }
    let rotated = special::omega_eval(&p, z, std::f64::consts::FRAC_PI_2, 1e-14)?;
    println!("J_(1/2)(-1) with the cut on the negative imaginary axis = {:.15}", rotated.value);
    Ok(())
}
