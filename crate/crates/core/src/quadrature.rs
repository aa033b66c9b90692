//! Globally adaptive Gauss–Kronrod (G10/K21) quadrature.
//!
//! Each panel is integrated with the 21-point Kronrod rule; the embedded
//! 10-point Gauss rule gives the error estimate `|K21 - G10|`, used
//! unscaled. The panel with the largest error is bisected until the summed
//! error meets `max(abs_tol, rel_tol·|I|)`.

#![allow(clippy::excessive_precision)]

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use crate::error::{Error, Result};

// Abscissae of the 21-point Kronrod rule on [-1, 1] (positive half, descending).
// Odd indices are the 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208980245011,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

const EVALS_PER_PANEL: usize = 21;

/// Tolerances and limits for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Maximum number of panels the interval may be split into.
    pub max_subdivisions: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            rel_tol: 1e-12,
            abs_tol: 0.0,
            max_subdivisions: 60,
        }
    }
}

impl QuadratureSettings {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        QuadratureSettings {
            rel_tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0) {
            return Err(Error::InvalidSettings(
                "rel_tol must be positive and finite",
            ));
        }
        if !(self.abs_tol.is_finite() && self.abs_tol >= 0.0) {
            return Err(Error::InvalidSettings(
                "abs_tol must be non-negative and finite",
            ));
        }
        if self.max_subdivisions < 10 {
            return Err(Error::InvalidSettings(
                "max_subdivisions must be at least 10",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    // Max-heap on error; ties broken by position so the order is total and
    // the bisection sequence is reproducible.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn kronrod21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(centre);
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    for (j, (&x, &w)) in XGK[..10].iter().zip(&WGK[..10]).enumerate() {
        let dx = half * x;
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }

    Panel {
        a,
        b,
        value: kronrod * half,
        error: libm::fabs((kronrod - gauss) * half),
    }
}

/// Integrates `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    settings: &QuadratureSettings,
) -> Result<Integral> {
    settings.validate()?;

    let first = kronrod21(&f, a, b);
    let mut value = first.value;
    let mut error = first.error;
    let mut heap = BinaryHeap::with_capacity(settings.max_subdivisions);
    heap.push(first);

    loop {
        let tolerance = settings.abs_tol.max(settings.rel_tol * libm::fabs(value));
        if error <= tolerance {
            return Ok(Integral {
                value,
                error_estimate: error,
                evaluations: heap.len() * 2 * EVALS_PER_PANEL - EVALS_PER_PANEL,
                subdivisions: heap.len(),
            });
        }
        if heap.len() >= settings.max_subdivisions || !value.is_finite() {
            return Err(Error::QuadratureNonConvergence {
                subdivisions: heap.len(),
                estimate: value,
                error_estimate: error,
                tolerance,
            });
        }

        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod21(&f, worst.a, mid);
        let right = kronrod21(&f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);

        // Re-sum to stop drift from the running updates.
        if heap.len() % 16 == 0 {
            value = heap.iter().map(|p| p.value).sum();
            error = heap.iter().map(|p| p.error).sum();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_weights_sum_to_two() {
        let k: f64 = WGK[10] + 2.0 * WGK[..10].iter().sum::<f64>();
        let g: f64 = 2.0 * WG.iter().sum::<f64>();
        assert!(libm::fabs(k - 2.0) < 1e-15);
        assert!(libm::fabs(g - 2.0) < 1e-15);
    }

    #[test]
    fn exact_on_polynomials() {
        // G10 is exact through degree 19, K21 through degree 31.
        let p = kronrod21(&|x: f64| libm::pow(x, 18.0), -1.0, 1.0);
        assert!(libm::fabs(p.value - 2.0 / 19.0) < 1e-15);
        assert!(p.error < 1e-15);
        let p = kronrod21(&|x: f64| libm::pow(x, 30.0), -1.0, 1.0);
        assert!(libm::fabs(p.value - 2.0 / 31.0) < 1e-15);
    }

    #[test]
    fn adaptive_on_peaked_integrand() {
        // ∫_{-1}^{1} 1/(1e-4 + x²) dx = 2·atan(100)/0.01
        let exact = 2.0 * libm::atan(100.0) / 0.01;
        let settings = QuadratureSettings {
            max_subdivisions: 200,
            ..Default::default()
        };
        let r = integrate(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, &settings).unwrap();
        assert!(libm::fabs(r.value - exact) <= 1e-11 * exact);
        assert!(r.subdivisions > 1);
    }

    #[test]
    fn reports_non_convergence() {
        let settings = QuadratureSettings {
            max_subdivisions: 10,
            ..Default::default()
        };
        let r = integrate(|x| 1.0 / (1e-8 + x * x), -1.0, 1.0, &settings);
        assert!(matches!(r, Err(Error::QuadratureNonConvergence { .. })));
    }

    #[test]
    fn rejects_bad_settings() {
        let bad = [
            QuadratureSettings::with_rel_tol(0.0),
            QuadratureSettings::with_rel_tol(f64::NAN),
            QuadratureSettings {
                max_subdivisions: 9,
                ..Default::default()
            },
            QuadratureSettings {
                abs_tol: -1.0,
                ..Default::default()
            },
        ];
        for s in bad {
            assert!(matches!(s.validate(), Err(Error::InvalidSettings(_))));
        }
    }
}
