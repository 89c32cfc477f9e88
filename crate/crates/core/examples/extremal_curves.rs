//! Extrema of the boundary functions g1, g2, l1 and l2.

use bessel_exp::theorems::{extremal_curve, ExtremalKind};

fn main() -> bessel_exp::Result<()> {
    let kinds = [ExtremalKind::G1, ExtremalKind::G2, ExtremalKind::Ell1 { alpha: 1.0 }, ExtremalKind::Ell2];
    for m in [1.0, 1.5, 2.0, 5.0] {
        for kind in kinds {
            let c = extremal_curve(kind, m)?;
            println!(
                "{:<22} m={m:<3} theta*={:.8} value={:.12} expected {:.12} (|diff| {:.1e})",
                format!("{kind:?}"),
                c.theta_star,
                c.extremal_value,
                c.expected_value,
                c.value_error()
            );
        }
    }
    Ok(())
}
