//! Hadamard products, the B operator, the Libera and Alexander transforms.

use bessel_exp::series::{Alexander, PowerSeries};
use bessel_exp::BesselParams;
use num_complex::Complex64;

fn show(label: &str, f: &PowerSeries, n: usize) {
    let head: Vec<String> = f.coeffs().iter().take(n).map(|a| format!("{:.6}", a.re)).collect();
    println!("{label:<28} {}", head.join(", "));
}

fn main() -> bessel_exp::Result<()> {
    let params = BesselParams::real(1.5, 1.0, 1.0)?;
    let koebe_like = PowerSeries::geometric(24);
    let vartheta = PowerSeries::vartheta(&params, 24)?;
    let via_operator = koebe_like.b_operator(&params)?;
    show("vartheta_{3/2,1,1}", &vartheta, 6);
    show("B_kappa[z/(1-z)]", &via_operator, 6);
    println!("max coefficient difference {:.1e}", vartheta.max_deviation(&via_operator));

    let libera = vartheta.libera()?;
    let kernel = PowerSeries::libera_kernel(24);
    show("L[vartheta]", &libera, 6);
    println!("L as a Hadamard product: difference {:.1e}", libera.max_deviation(&vartheta.hadamard(&kernel)));

    let starlike = vartheta.alexander(Alexander::ToStarlike);
    show("z vartheta'", &starlike, 6);
    let back = starlike.alexander(Alexander::ToConvex);
    println!("Alexander round trip: difference {:.1e}", back.max_deviation(&vartheta));

    let z = Complex64::new(0.4, 0.2);
    println!("L[vartheta]({z}) = {:.15}", libera.eval(z)?);
    println!("as JSON: {}...", &vartheta.to_json()[..60]);
    Ok(())
}
