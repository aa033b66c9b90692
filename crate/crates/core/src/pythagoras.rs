//! Conic triples on right triangles and the identity `c1² = c2² + c3²`.
//!
//! With a common eccentricity and a common chord/sagitta ratio `k`, every
//! arc on the triangle is a scaled copy of the unit-chord arc, so
//! `c_i = g(e, k) · l_i` and the classical relation carries over.

use alloc::vec::Vec;

use crate::arclen::{arc_length, QuadratureSettings};
use crate::conic::{construct_arc, ConicArc};
use crate::error::{finite, positive, Error, Result};

/// Right triangle by side lengths; index 1 is the hypotenuse, legs are
/// ordered `l2 >= l3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RightTriangle {
    l1: f64,
    l2: f64,
    l3: f64,
}

pub fn make_right_triangle(l2: f64, l3: f64) -> Result<RightTriangle> {
    RightTriangle::from_legs(l2, l3)
}

impl RightTriangle {
    pub fn from_legs(leg_a: f64, leg_b: f64) -> Result<Self> {
        positive("leg", leg_a)?;
        positive("leg", leg_b)?;
        let (l2, l3) = if leg_a >= leg_b {
            (leg_a, leg_b)
        } else {
            (leg_b, leg_a)
        };
        Ok(RightTriangle {
            l1: libm::hypot(l2, l3),
            l2,
            l3,
        })
    }

    pub fn l1(&self) -> f64 {
        self.l1
    }

    pub fn l2(&self) -> f64 {
        self.l2
    }

    pub fn l3(&self) -> f64 {
        self.l3
    }

    /// `[l1, l2, l3]`.
    pub fn sides(&self) -> [f64; 3] {
        [self.l1, self.l2, self.l3]
    }

    /// Sagittae `l_i / k` of the arcs for ratio `k`.
    pub fn sagittae(&self, k: f64) -> [f64; 3] {
        self.sides().map(|l| l / k)
    }
}

/// The three arcs of one `(e, k)` family on a right triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicTriple {
    pub e: f64,
    pub k: f64,
    pub arcs: [ConicArc; 3],
    pub lengths: [f64; 3],
    pub residual: f64,
}

impl ConicTriple {
    /// Largest pairwise gap between the arcs' focus half-angles.
    pub fn focus_angle_spread(&self) -> f64 {
        spread(self.arcs.map(|a| a.beta()))
    }

    /// Same for the centre half-angles; `None` for parabolas.
    pub fn centre_angle_spread(&self) -> Option<f64> {
        let [a, b, c] = self.arcs.map(|a| a.alpha());
        Some(spread([a?, b?, c?]))
    }
}

fn spread(v: [f64; 3]) -> f64 {
    let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = v.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

pub fn conic_triple(
    tri: &RightTriangle,
    e: f64,
    k: f64,
    settings: &QuadratureSettings,
) -> Result<ConicTriple> {
    positive("k", k)?;
    let sides = tri.sides();
    let mut arcs = [None; 3];
    let mut lengths = [0.0; 3];
    for (i, &l) in sides.iter().enumerate() {
        let arc = construct_arc(l, l / k, e)?;
        lengths[i] = arc_length(&arc, settings)?.length;
        arcs[i] = Some(arc);
    }
    Ok(ConicTriple {
        e,
        k,
        arcs: arcs.map(|a| a.expect("all three arcs built")),
        lengths,
        residual: residual_of(lengths),
    })
}

/// `|c1² − c2² − c3²| / c1²`.
pub fn residual_of(lengths: [f64; 3]) -> f64 {
    let [c1, c2, c3] = lengths;
    libm::fabs(c1 * c1 - c2 * c2 - c3 * c3) / (c1 * c1)
}

pub fn pythagorean_residual(triple: &ConicTriple) -> f64 {
    residual_of(triple.lengths)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepValues {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub residual: f64,
    /// `c1 / l1`
    pub g: f64,
}

/// One cell of an `(e, k)` sweep; `values` is `None` for infeasible cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub e: f64,
    pub k: f64,
    pub values: Option<SweepValues>,
}

impl SweepRow {
    pub fn feasible(&self) -> bool {
        self.values.is_some()
    }
}

/// Evaluates every `(e, k)` cell, ordered by `e` then `k` ascending.
///
/// Infeasible cells become rows without values; bad input and quadrature
/// failures are errors.
pub fn sweep(
    tri: &RightTriangle,
    e_values: &[f64],
    k_values: &[f64],
    settings: &QuadratureSettings,
) -> Result<Vec<SweepRow>> {
    if e_values.is_empty() {
        return Err(Error::EmptyList("eccentricity list"));
    }
    if k_values.is_empty() {
        return Err(Error::EmptyList("k list"));
    }
    let mut es = e_values.to_vec();
    let mut ks = k_values.to_vec();
    for &e in &es {
        finite("eccentricity", e)?;
    }
    for &k in &ks {
        positive("k", k)?;
    }
    es.sort_by(f64::total_cmp);
    ks.sort_by(f64::total_cmp);

    let mut rows = Vec::with_capacity(es.len() * ks.len());
    for &e in &es {
        for &k in &ks {
            rows.push(sweep_cell(tri, e, k, settings)?);
        }
    }
    Ok(rows)
}

/// A single sweep cell.
pub fn sweep_cell(
    tri: &RightTriangle,
    e: f64,
    k: f64,
    settings: &QuadratureSettings,
) -> Result<SweepRow> {
    let values = match conic_triple(tri, e, k, settings) {
        Ok(t) => Some(SweepValues {
            c1: t.lengths[0],
            c2: t.lengths[1],
            c3: t.lengths[2],
            residual: t.residual,
            g: t.lengths[0] / tri.l1(),
        }),
        Err(Error::InfeasibleSagitta { .. }) => None,
        Err(other) => return Err(other),
    };
    Ok(SweepRow { e, k, values })
}
