//! Writes image curves and the exp(D) boundary as CSV and SVG.

use bessel_exp::cli::{image_curve, to_csv, to_svg, Overlay, Quantity, EXP_BOUNDARY_POINTS};
use bessel_exp::series::{PowerSeries, DEFAULT_ORDER};
use bessel_exp::BesselParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("bessel-exp-figures");
    std::fs::create_dir_all(&dir)?;
    let cases = [
        ("phi_c2_k1.5", BesselParams::from_kappa(1.5.into(), 2.0.into())?, false, Quantity::Value, Overlay::Exp),
        ("zf2_nu-2.5", BesselParams::real(-2.5, 1.0, 1.0)?, true, Quantity::Zf2, Overlay::Circle),
        ("starlike_nu-0.5", BesselParams::real(-0.5, 1.0, 1.0)?, true, Quantity::Starlike, Overlay::Exp),
    ];
    for (name, params, vartheta, quantity, overlay) in cases {
        let f = if vartheta {
            PowerSeries::vartheta(&params, DEFAULT_ORDER)?
        } else {
            PowerSeries::phi(&params, DEFAULT_ORDER)?
        };
        let curve = image_curve(&f, quantity, 0.999, 2048)?;
        let boundary = overlay.boundary(EXP_BOUNDARY_POINTS);
        let outside = curve.iter().filter(|(_, w)| !overlay.contains(*w, &boundary)).count();
        std::fs::write(dir.join(format!("{name}.csv")), to_csv(&curve))?;
        std::fs::write(dir.join(format!("{name}.svg")), to_svg(&curve, Some(&boundary)))?;
        println!("{name}: {outside} of {} points outside the {overlay:?} region", curve.len());
    }
    println!("wrote {}", dir.display());
    Ok(())
}
