//! Arc lengths of conic arcs.
//!
//! The primary route integrates the focal polar form
//!
//! ```text
//! c = ∫_{-β}^{β} √(r² + r'²) dθ = p ∫_{-β}^{β} √(1 + 2e cos θ + e²) / (1 + e cos θ)² dθ
//! ```
//!
//! adaptively. Circles and parabolas have elementary closed forms and any arc
//! can be approximated by an inscribed polyline; both serve as independent
//! checks on the quadrature.

use crate::conic::{construct_arc, ConicArc, ConicClass};
use crate::error::{Error, Result};
use crate::point::Point;
use crate::quadrature::integrate;

pub use crate::quadrature::QuadratureSettings;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcLengthResult {
    pub length: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// `√(1 + 2e cos θ + e²) / (1 + e cos θ)²`, the arc-length density per unit `p`.
pub fn unit_integrand(e: f64, theta: f64) -> f64 {
    let cos = libm::cos(theta);
    let d = 1.0 + e * cos;
    libm::sqrt(1.0 + 2.0 * e * cos + e * e) / (d * d)
}

pub fn arc_length(arc: &ConicArc, settings: &QuadratureSettings) -> Result<ArcLengthResult> {
    let e = arc.e();
    let beta = arc.beta();
    let unit = integrate(|t| unit_integrand(e, t), -beta, beta, settings)?;
    Ok(ArcLengthResult {
        length: arc.p() * unit.value,
        error_estimate: arc.p() * unit.error_estimate,
        evaluations: unit.evaluations,
    })
}

/// `2 R asin(l / 2R)`.
pub fn closed_form_circle(arc: &ConicArc) -> Result<f64> {
    if arc.class() != ConicClass::Circle {
        return Err(Error::WrongClass { expected: "circle" });
    }
    let r = arc.a().expect("circle has a radius");
    Ok(2.0 * r * libm::asin(arc.l() / (2.0 * r)))
}

/// Length of `y = f - x²/(4F)` over `|x| ≤ l/2`, i.e.
/// `2F (u √(1 + u²) + asinh u)` with `u = l / 4F = 4f / l`.
pub fn closed_form_parabola(arc: &ConicArc) -> Result<f64> {
    if arc.class() != ConicClass::Parabola {
        return Err(Error::WrongClass {
            expected: "parabola",
        });
    }
    let focal = arc.focal_length().expect("parabola has a focal length");
    let u = arc.l() / (4.0 * focal);
    Ok(2.0 * focal * (u * libm::sqrt(1.0 + u * u) + libm::asinh(u)))
}

/// Length of the inscribed polyline through `sample_points(arc, n)`.
pub fn polyline_length(arc: &ConicArc, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::DegenerateSampleCount(n));
    }
    let nf = n as f64;
    let beta = arc.beta();
    let mut prev: Option<Point> = None;
    let mut total = 0.0;
    for i in 0..=n {
        let pt = arc.point_at(beta * ((2.0 * i as f64 - nf) / nf));
        if let Some(q) = prev {
            total += pt.distance(q);
        }
        prev = Some(pt);
    }
    Ok(total)
}

/// Arc length per unit chord for the `(e, k)` family, so that
/// `c(l, l/k, e) = g · l`.
pub fn g_factor(e: f64, k: f64, settings: &QuadratureSettings) -> Result<f64> {
    crate::error::positive("k", k)?;
    let arc = construct_arc(1.0, 1.0 / k, e)?;
    Ok(arc_length(&arc, settings)?.length)
}
