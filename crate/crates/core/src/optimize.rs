//! Golden-section search for one-dimensional extrema.

const INV_PHI: f64 = 0.618_033_988_749_894_9; // (√5 - 1) / 2

/// Location and value of a local extremum found by [`golden_section_min`]
/// or [`golden_section_max`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub x: f64,
    pub value: f64,
}

/// Minimizes a unimodal `f` on `[a, b]` until the bracket is narrower than `xtol`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, xtol: f64) -> Extremum {
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    // 200 iterations shrink any bracket below f64 resolution
    for _ in 0..200 {
        if (b - a).abs() <= xtol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let (x, value) = if fc < fd { (c, fc) } else { (d, fd) };
    Extremum { x, value }
}

pub fn golden_section_max(f: impl Fn(f64) -> f64, a: f64, b: f64, xtol: f64) -> Extremum {
    let e = golden_section_min(|x| -f(x), a, b, xtol);
    Extremum { x: e.x, value: -e.value }
}
