//! Raises the order of z calJ one step at a time through the B operator.

use bessel_exp::gft::CheckOptions;
use bessel_exp::theorems;

fn main() -> bessel_exp::Result<()> {
    for c in [1.0, -1.0] {
        let reports = theorems::bessel_chain(1.5, 5, c, &CheckOptions::default())?;
        for (n, r) in reports.iter().enumerate() {
            let premise = &r.supporting_checks[1];
            let conclusion = r.conclusion_check.as_ref().map_or(f64::NAN, |c| c.sup_value);
            println!(
                "c={c:>2} step {}: premise sup {:.4} -> conclusion sup {:.4}, applicable {}",
                n + 1,
                premise.sup_value,
                conclusion,
                r.applicable
            );
        }
    }
    Ok(())
}
