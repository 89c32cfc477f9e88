//! Image curves of `|z| = r` and their CSV/SVG export.

use std::f64::consts::{E, TAU};
use std::fmt::Write;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::gft;
use crate::holomorphic::Holomorphic;

/// Vertices of the sampled boundary of `exp(𝔻)` used for the winding test.
pub const EXP_BOUNDARY_POINTS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `f(z)`, for instance `φ` itself.
    Value,
    /// `z f'(z)/f(z)`.
    Starlike,
    /// `1 + z f''(z)/f'(z)`.
    Convex,
    /// `z f''(z)/f'(z)`.
    Zf2,
}

impl Quantity {
    pub fn eval(self, f: &(impl Holomorphic + ?Sized), z: Complex64) -> Result<Complex64> {
        match self {
            Quantity::Value => f.value(z),
            Quantity::Starlike => gft::starlike_quantity(f, z),
            Quantity::Convex => gft::convex_quantity(f, z),
            Quantity::Zf2 => Ok(gft::convex_quantity(f, z)? - 1.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Overlay {
    /// The boundary `e^{e^{iθ}}` of `exp(𝔻)`.
    Exp,
    /// The circle `|w| = 1 - 1/e`.
    Circle,
    None,
}

impl Overlay {
    pub fn boundary(self, points: usize) -> Vec<Complex64> {
        let radius = 1.0 - 1.0 / E;
        (0..points)
            .map(|k| {
                let u = Complex64::from_polar(1.0, TAU * k as f64 / points as f64);
                match self {
                    Overlay::Exp => u.exp(),
                    Overlay::Circle => u * radius,
                    Overlay::None => Complex64::new(0.0, 0.0),
                }
            })
            .collect()
    }

    /// Strict interior test; `None` contains everything.
    pub fn contains(self, w: Complex64, boundary: &[Complex64]) -> bool {
        match self {
            Overlay::Exp => winding_number(w, boundary) != 0,
            Overlay::Circle => w.norm() < 1.0 - 1.0 / E,
            Overlay::None => true,
        }
    }
}

/// Winding number of the closed polygon `poly` around `p`.
pub fn winding_number(p: Complex64, poly: &[Complex64]) -> i32 {
    let mut wn = 0;
    for (i, a) in poly.iter().enumerate() {
        let b = poly[(i + 1) % poly.len()];
        let cross = (b.re - a.re) * (p.im - a.im) - (p.re - a.re) * (b.im - a.im);
        if a.im <= p.im {
            if b.im > p.im && cross > 0.0 {
                wn += 1;
            }
        } else if b.im <= p.im && cross < 0.0 {
            wn -= 1;
        }
    }
    wn
}

/// Samples `quantity(f)` on `|z| = radius` at `points` equispaced angles.
pub fn image_curve(
    f: &(impl Holomorphic + ?Sized),
    quantity: Quantity,
    radius: f64,
    points: usize,
) -> Result<Vec<(f64, Complex64)>> {
    (0..points)
        .map(|k| {
            let theta = TAU * k as f64 / points as f64;
            Ok((theta, quantity.eval(f, Complex64::from_polar(radius, theta))?))
        })
        .collect()
}

pub fn to_csv(curve: &[(f64, Complex64)]) -> String {
    let mut out = String::from("theta,re,im\n");
    for (theta, w) in curve {
        writeln!(out, "{theta:.16e},{:.16e},{:.16e}", w.re, w.im).unwrap();
    }
    out
}

fn polyline(out: &mut String, points: impl Iterator<Item = Complex64>, colour: &str) {
    out.push_str("  <polyline fill=\"none\" stroke=\"");
    out.push_str(colour);
    out.push_str("\" stroke-width=\"0.015\" points=\"");
    for w in points {
        if w.re.is_finite() && w.im.is_finite() {
            write!(out, "{:.6},{:.6} ", w.re, -w.im).unwrap();
        }
    }
    out.push_str("\"/>\n");
}

/// Self-contained SVG over the fixed window `[-1, 4] × [-2.5, 2.5]`.
pub fn to_svg(curve: &[(f64, Complex64)], boundary: Option<&[Complex64]>) -> String {
    let mut out = String::new();
    out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -2.5 5 5\" width=\"600\" height=\"600\">\n");
    out.push_str("  <rect x=\"-1\" y=\"-2.5\" width=\"5\" height=\"5\" fill=\"white\"/>\n");
    out.push_str("  <line x1=\"-1\" y1=\"0\" x2=\"4\" y2=\"0\" stroke=\"#999\" stroke-width=\"0.005\"/>\n");
    out.push_str("  <line x1=\"0\" y1=\"-2.5\" x2=\"0\" y2=\"2.5\" stroke=\"#999\" stroke-width=\"0.005\"/>\n");
    if let Some(b) = boundary {
        let closed = b.iter().copied().chain(b.first().copied());
        polyline(&mut out, closed, "#d62728");
    }
    let closed = curve.iter().map(|(_, w)| *w).chain(curve.first().map(|(_, w)| *w));
    polyline(&mut out, closed, "#1f77b4");
    out.push_str("</svg>\n");
    out
}
