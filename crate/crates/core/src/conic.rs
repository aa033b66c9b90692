//! Symmetric conic arcs on a chord.
//!
//! Given a chord of length `l`, a sagitta `f` and an eccentricity `e`, there is
//! exactly one conic arc of that eccentricity through the chord endpoints whose
//! axis is the chord's perpendicular bisector and whose vertex sits at the
//! sagitta tip. Only the orientation with the vertex on the focal axis is
//! modelled.
//!
//! Everything is expressed in the *chord frame*: the chord lies on the x-axis
//! centred at the origin, the endpoints are `(±l/2, 0)` and the sagitta tip is
//! `(0, f)`. The arc bulges into `y >= 0`.
//!
//! The focal polar form `r(θ) = p / (1 + e cos θ)` is used with `θ = 0`
//! pointing from the focus towards the sagitta tip, so the focus sits at
//! `(0, -s)` where `s` is the signed offset from the focus to the chord.
//! Both `p` and `s` have a single closed form valid for every class:
//!
//! ```text
//! p / l = k/8 + (1 - e²) / (2k)
//! s / l = k / (8(1 + e)) - (1 + e) / (2k)
//! ```

use alloc::vec::Vec;

use crate::error::{finite, positive, Error, Result};
use crate::point::Point;

/// Conic classes by eccentricity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicClass {
    Circle,
    Ellipse,
    Parabola,
    Hyperbola,
}

impl ConicClass {
    pub fn name(self) -> &'static str {
        match self {
            ConicClass::Circle => "circle",
            ConicClass::Ellipse => "ellipse",
            ConicClass::Parabola => "parabola",
            ConicClass::Hyperbola => "hyperbola",
        }
    }

    pub fn has_centre(self) -> bool {
        self != ConicClass::Parabola
    }
}

impl core::fmt::Display for ConicClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

fn eccentricity(e: f64) -> Result<f64> {
    finite("eccentricity", e)?;
    if e < 0.0 {
        return Err(Error::NegativeEccentricity(e));
    }
    Ok(e)
}

pub fn classify(e: f64) -> Result<ConicClass> {
    let e = eccentricity(e)?;
    Ok(if e == 0.0 {
        ConicClass::Circle
    } else if e < 1.0 {
        ConicClass::Ellipse
    } else if e == 1.0 {
        ConicClass::Parabola
    } else {
        ConicClass::Hyperbola
    })
}

/// Smallest admissible chord/sagitta ratio, `2·√|1 − e²|`.
///
/// Arcs exist only for `k > k_min`. For ellipses and circles the bound keeps
/// the chord on the near side of the centre; for hyperbolas it keeps the
/// semi-transverse axis positive. Parabolas have no bound.
pub fn feasibility_min_k(e: f64) -> Result<f64> {
    let e = eccentricity(e)?;
    Ok(2.0 * libm::sqrt(libm::fabs(1.0 - e * e)))
}

fn check_feasible(e: f64, k: f64) -> Result<()> {
    let k_min = feasibility_min_k(e)?;
    if k > k_min {
        Ok(())
    } else {
        Err(Error::InfeasibleSagitta { e, k, k_min })
    }
}

/// Semi-latus rectum per unit chord, `p / l`.
pub fn semi_latus_rectum_ratio(e: f64, k: f64) -> f64 {
    k / 8.0 + (1.0 - e * e) / (2.0 * k)
}

/// Signed focus-to-chord offset per unit chord, `s / l`.
pub fn focus_offset_ratio(e: f64, k: f64) -> f64 {
    k / (8.0 * (1.0 + e)) - (1.0 + e) / (2.0 * k)
}

/// Centre-to-chord distance per unit chord, `m / l`. Meaningless for parabolas.
fn centre_offset_ratio(e: f64, k: f64) -> f64 {
    let q = 1.0 - e * e;
    if e <= 1.0 {
        k / (8.0 * q) - 1.0 / (2.0 * k)
    } else {
        k / (8.0 * -q) + 1.0 / (2.0 * k)
    }
}

/// Half the angle the chord subtends at the conic's centre.
///
/// Depends only on `(e, k)`; lies in `(0, π/2)`.
pub fn centre_half_angle(e: f64, k: f64) -> Result<f64> {
    let e = eccentricity(e)?;
    positive("k", k)?;
    if e == 1.0 {
        return Err(Error::ParabolaHasNoCentre);
    }
    check_feasible(e, k)?;
    Ok(libm::atan2(0.5, centre_offset_ratio(e, k)))
}

/// Half the angle the chord subtends at the focus nearest the arc.
///
/// Depends only on `(e, k)`; lies in `(0, π)` and exceeds `π/2` when the
/// focus lies beyond the chord (`k < 2(1 + e)`).
pub fn focus_half_angle(e: f64, k: f64) -> Result<f64> {
    let e = eccentricity(e)?;
    positive("k", k)?;
    check_feasible(e, k)?;
    Ok(libm::atan2(0.5, focus_offset_ratio(e, k)))
}

/// Chord length, sagitta, and their ratio `k = l / f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordSagitta {
    l: f64,
    f: f64,
    k: f64,
}

impl ChordSagitta {
    pub fn new(l: f64, f: f64) -> Result<Self> {
        positive("chord length", l)?;
        positive("sagitta", f)?;
        Ok(ChordSagitta { l, f, k: l / f })
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn k(&self) -> f64 {
        self.k
    }
}

/// A fully resolved symmetric conic arc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicArc {
    class: ConicClass,
    e: f64,
    chord: ChordSagitta,
    a: Option<f64>,
    b: Option<f64>,
    c_focal: Option<f64>,
    m: f64,
    p: f64,
    s: f64,
    beta: f64,
    alpha: Option<f64>,
}

/// Builds the unique arc with chord `l`, sagitta `f` and eccentricity `e`.
pub fn construct_arc(l: f64, f: f64, e: f64) -> Result<ConicArc> {
    ConicArc::new(l, f, e)
}

impl ConicArc {
    pub fn new(l: f64, f: f64, e: f64) -> Result<Self> {
        let class = classify(e)?;
        let chord = ChordSagitta::new(l, f)?;
        let k = chord.k;
        check_feasible(e, k)?;

        let (a, b, c_focal, m) = match class {
            ConicClass::Circle => {
                let r = l * l / (8.0 * f) + f / 2.0;
                (Some(r), Some(r), Some(0.0), r - f)
            }
            ConicClass::Ellipse => {
                let q = 1.0 - e * e;
                let a = l * l / (8.0 * f * q) + f / 2.0;
                (Some(a), Some(a * libm::sqrt(q)), Some(e * a), a - f)
            }
            ConicClass::Hyperbola => {
                let q = e * e - 1.0;
                let a = l * l / (8.0 * f * q) - f / 2.0;
                (Some(a), Some(a * libm::sqrt(q)), Some(e * a), a + f)
            }
            // m carries the focal length for parabolas
            ConicClass::Parabola => (None, None, None, l * l / (16.0 * f)),
        };

        let p = l * semi_latus_rectum_ratio(e, k);
        let s = l * focus_offset_ratio(e, k);
        let beta = libm::atan2(0.5, focus_offset_ratio(e, k));
        let alpha = class
            .has_centre()
            .then(|| libm::atan2(0.5, centre_offset_ratio(e, k)));

        Ok(ConicArc {
            class,
            e,
            chord,
            a,
            b,
            c_focal,
            m,
            p,
            s,
            beta,
            alpha,
        })
    }

    pub fn class(&self) -> ConicClass {
        self.class
    }

    pub fn e(&self) -> f64 {
        self.e
    }

    pub fn chord(&self) -> ChordSagitta {
        self.chord
    }

    pub fn l(&self) -> f64 {
        self.chord.l
    }

    pub fn f(&self) -> f64 {
        self.chord.f
    }

    pub fn k(&self) -> f64 {
        self.chord.k
    }

    /// Semi-major (ellipse), semi-transverse (hyperbola) axis or radius.
    pub fn a(&self) -> Option<f64> {
        self.a
    }

    pub fn b(&self) -> Option<f64> {
        self.b
    }

    pub fn c_focal(&self) -> Option<f64> {
        self.c_focal
    }

    /// Distance from the centre to the chord along the axis; for a parabola,
    /// the focal length instead.
    pub fn m(&self) -> f64 {
        self.m
    }

    /// Focal length of a parabola.
    pub fn focal_length(&self) -> Option<f64> {
        (self.class == ConicClass::Parabola).then_some(self.m)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    /// Focus-to-directrix distance `d = p / e`; undefined for circles.
    pub fn directrix_distance(&self) -> Option<f64> {
        (self.e > 0.0).then(|| self.p / self.e)
    }

    /// Focus position in the chord frame.
    pub fn focus(&self) -> Point {
        Point::new(0.0, -self.s)
    }

    /// `r(θ) = p / (1 + e cos θ)` for `|θ| ≤ β`.
    pub fn polar_radius(&self, theta: f64) -> Result<f64> {
        finite("theta", theta)?;
        if 1.0 + self.e * libm::cos(theta) <= 0.0 {
            return Err(Error::AsymptoteDomain { theta });
        }
        if libm::fabs(theta) > self.beta {
            return Err(Error::OutOfAngularRange {
                theta,
                beta: self.beta,
            });
        }
        Ok(self.radius_unchecked(theta))
    }

    fn radius_unchecked(&self, theta: f64) -> f64 {
        self.p / (1.0 + self.e * libm::cos(theta))
    }

    /// Chord-frame point at focal angle `theta` (no range check).
    pub fn point_at(&self, theta: f64) -> Point {
        let r = self.radius_unchecked(theta);
        let (sin, cos) = libm::sincos(theta);
        Point::new(r * sin, r * cos - self.s)
    }

    /// `n + 1` chord-frame points at uniformly spaced focal angles.
    ///
    /// Runs from `(-l/2, 0)` to `(l/2, 0)`; for even `n` the middle sample is
    /// the sagitta tip.
    pub fn sample_points(&self, n: usize) -> Result<Vec<Point>> {
        if n < 2 {
            return Err(Error::DegenerateSampleCount(n));
        }
        let nf = n as f64;
        Ok((0..=n)
            .map(|i| {
                let t = (2.0 * i as f64 - nf) / nf;
                self.point_at(self.beta * t)
            })
            .collect())
    }

    /// Dimensionless residual of the class's canonical equation at a
    /// chord-frame point; zero on the conic.
    pub fn canonical_residual(&self, pt: Point) -> f64 {
        let Point { x, y } = pt;
        match self.class {
            ConicClass::Circle | ConicClass::Ellipse => {
                let (a, b) = (self.a.unwrap(), self.b.unwrap());
                let u = y + self.m;
                u * u / (a * a) + x * x / (b * b) - 1.0
            }
            ConicClass::Hyperbola => {
                let (a, b) = (self.a.unwrap(), self.b.unwrap());
                let u = self.m - y;
                u * u / (a * a) - x * x / (b * b) - 1.0
            }
            ConicClass::Parabola => {
                let l = self.chord.l;
                (x * x + 4.0 * self.m * (y - self.chord.f)) / (l * l)
            }
        }
    }
}
