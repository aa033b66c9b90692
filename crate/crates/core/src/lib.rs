//! Symmetric conic arcs on the sides of a right triangle.
//!
//! For a fixed eccentricity `e` and a fixed chord/sagitta ratio `k`, the arcs
//! built on the three sides of a right triangle have lengths satisfying
//! `c1² = c2² + c3²`, and the triangles enveloping those arcs are all
//! homothetic to the original about a single point, the midpoint of the
//! altitude from the right angle.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! - [`conic`]: construction of the unique arc for `(l, f, e)`, its angles and
//!   polar form.
//! - [`arclen`]: arc length by adaptive quadrature, with closed-form and
//!   polyline cross-checks.
//! - [`pythagoras`]: conic triples, the residual of the identity, sweeps.
//! - [`homothety`]: enveloping triangles, the Pythagorean centre, scenes.

#![no_std]

extern crate alloc;

pub mod arclen;
pub mod conic;
pub mod error;
pub mod homothety;
pub mod point;
pub mod pythagoras;
pub mod quadrature;

pub use arclen::{
    arc_length, closed_form_circle, closed_form_parabola, g_factor, polyline_length,
    ArcLengthResult, QuadratureSettings,
};
pub use conic::{
    centre_half_angle, classify, construct_arc, feasibility_min_k, focus_half_angle, ChordSagitta,
    ConicArc, ConicClass,
};
pub use error::{Error, Result};
pub use homothety::{
    altitude_from_right_angle, build_scene, enveloping_triangle, homothety_ratio, place_triangle,
    pythagorean_centre, verify_homothety, HomothetyReport, Layer, PlanarTriangle, Scene,
};
pub use point::Point;
pub use pythagoras::{
    conic_triple, make_right_triangle, pythagorean_residual, sweep, ConicTriple, RightTriangle,
    SweepRow, SweepValues,
};
