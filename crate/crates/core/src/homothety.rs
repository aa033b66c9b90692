//! Enveloping triangles and the Pythagorean centre.
//!
//! Moving each side of a right triangle outward by its sagitta `l_i / k`
//! yields a similar triangle. All of these envelopes are images of the
//! original under homotheties centred at one point: the midpoint `P` of the
//! altitude from the right angle. With altitude `h1` and hypotenuse sagitta
//! `f1 = l1 / k`, the ratio is `(h1/2 + f1) / (h1/2)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::conic::construct_arc;
use crate::error::{positive, Result};
use crate::point::{line_intersection, Point};

/// A right triangle placed in the plane with the right angle at `p1`.
///
/// `l1 = |P2P3|` (hypotenuse), `l2 = |P1P2|`, `l3 = |P1P3|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarTriangle {
    p1: Point,
    p2: Point,
    p3: Point,
    l1: f64,
    l2: f64,
    l3: f64,
}

/// `P1 = (0, 0)`, `P2 = (l2, 0)`, `P3 = (0, l3)`; counter-clockwise.
pub fn place_triangle(l2: f64, l3: f64) -> Result<PlanarTriangle> {
    positive("leg", l2)?;
    positive("leg", l3)?;
    Ok(PlanarTriangle::from_vertices_unchecked(
        Point::ORIGIN,
        Point::new(l2, 0.0),
        Point::new(0.0, l3),
    ))
}

impl PlanarTriangle {
    fn from_vertices_unchecked(p1: Point, p2: Point, p3: Point) -> Self {
        PlanarTriangle {
            p1,
            p2,
            p3,
            l1: p2.distance(p3),
            l2: p1.distance(p2),
            l3: p1.distance(p3),
        }
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.p1, self.p2, self.p3]
    }

    pub fn p1(&self) -> Point {
        self.p1
    }

    pub fn p2(&self) -> Point {
        self.p2
    }

    pub fn p3(&self) -> Point {
        self.p3
    }

    /// `[l1, l2, l3]`.
    pub fn sides(&self) -> [f64; 3] {
        [self.l1, self.l2, self.l3]
    }

    /// Twice the signed area; positive for counter-clockwise vertices.
    pub fn orientation(&self) -> f64 {
        (self.p2 - self.p1).cross(self.p3 - self.p1)
    }

    /// `(P2 − P1)·(P3 − P1)`, zero for a right angle at `P1`.
    pub fn right_angle_defect(&self) -> f64 {
        (self.p2 - self.p1).dot(self.p3 - self.p1)
    }

    /// Directed edges carrying sides 1, 2 and 3, traversed counter-clockwise.
    pub fn edges(&self) -> [(Point, Point); 3] {
        let (a, b, c) = (self.p1, self.p2, self.p3);
        if self.orientation() >= 0.0 {
            [(b, c), (a, b), (c, a)]
        } else {
            [(c, b), (b, a), (a, c)]
        }
    }

    /// Ratio of this triangle's hypotenuse to `other`'s.
    pub fn scale_relative_to(&self, other: &PlanarTriangle) -> f64 {
        self.l1 / other.l1
    }
}

/// Outward unit normal of a counter-clockwise edge.
fn outward_normal(a: Point, b: Point) -> Point {
    let d = b - a;
    Point::new(d.y, -d.x) * (1.0 / d.norm())
}

/// Foot of the altitude from `P1` and its length `h1 = l2·l3 / l1`.
pub fn altitude_from_right_angle(tri: &PlanarTriangle) -> (Point, f64) {
    let d = tri.p3 - tri.p2;
    let t = (tri.p1 - tri.p2).dot(d) / d.dot(d);
    let foot = tri.p2 + d * t;
    (foot, tri.l2 * tri.l3 / tri.l1)
}

/// Midpoint of the altitude from the right angle.
pub fn pythagorean_centre(tri: &PlanarTriangle) -> Point {
    let (foot, _) = altitude_from_right_angle(tri);
    tri.p1.midpoint(foot)
}

/// Triangle bounded by the side lines moved outward by `l_i / k`.
pub fn enveloping_triangle(tri: &PlanarTriangle, k: f64) -> Result<PlanarTriangle> {
    positive("k", k)?;
    let offsets = tri.sides().map(|l| l / k);
    let [hyp, s2, s3] = tri.edges().map(|(a, b)| (a, b, outward_normal(a, b)));
    let shifted = |(a, b, n): (Point, Point, Point), off: f64| (a + n * off, b + n * off);
    let hyp = shifted(hyp, offsets[0]);
    let s2 = shifted(s2, offsets[1]);
    let s3 = shifted(s3, offsets[2]);

    let meet = |u: (Point, Point), v: (Point, Point)| {
        line_intersection(u.0, u.1, v.0, v.1)
            .expect("adjacent sides of a triangle are not parallel")
    };
    // P1 lies on sides 2 and 3, P2 on sides 1 and 2, P3 on sides 1 and 3.
    Ok(PlanarTriangle::from_vertices_unchecked(
        meet(s2, s3),
        meet(hyp, s2),
        meet(hyp, s3),
    ))
}

/// `1 + 2·l1 / (k·h1)`.
pub fn homothety_ratio(tri: &PlanarTriangle, k: f64) -> Result<f64> {
    positive("k", k)?;
    let (_, h1) = altitude_from_right_angle(tri);
    Ok(1.0 + 2.0 * tri.l1 / (k * h1))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomothetyReport {
    pub k: f64,
    pub centre: Point,
    pub ratio: f64,
    pub enveloping: PlanarTriangle,
    /// `max_i |P_i' − (P + ρ (P_i − P))|`.
    pub max_deviation: f64,
    /// Largest gap between `h1/2 + f1` and the centre's distances to `P1'`
    /// and to the enveloping hypotenuse.
    pub midpoint_deviation: f64,
}

/// Builds the envelope for `k` and measures how well the homothety about
/// the Pythagorean centre reproduces it.
pub fn verify_homothety(tri: &PlanarTriangle, k: f64) -> Result<HomothetyReport> {
    let centre = pythagorean_centre(tri);
    let ratio = homothety_ratio(tri, k)?;
    let enveloping = enveloping_triangle(tri, k)?;

    let max_deviation = tri
        .vertices()
        .iter()
        .zip(enveloping.vertices())
        .map(|(&p, q)| q.distance(centre + (p - centre) * ratio))
        .fold(0.0, f64::max);

    let (_, h1) = altitude_from_right_angle(tri);
    let expected = h1 / 2.0 + tri.l1 / k;
    let to_vertex = centre.distance(enveloping.p1);
    let (a, b) = enveloping.edges()[0];
    let to_side = libm::fabs((b - a).cross(centre - a)) / a.distance(b);
    let midpoint_deviation = libm::fabs(to_vertex - expected).max(libm::fabs(to_side - expected));

    Ok(HomothetyReport {
        k,
        centre,
        ratio,
        enveloping,
        max_deviation,
        midpoint_deviation,
    })
}

/// Pairwise intersections of the lines `P_i P_i'` (pairs 1–2, 1–3, 2–3).
pub fn homothety_axis_intersections(
    tri: &PlanarTriangle,
    enveloping: &PlanarTriangle,
) -> [Option<Point>; 3] {
    let v = tri.vertices();
    let w = enveloping.vertices();
    let meet = |i: usize, j: usize| line_intersection(v[i], w[i], v[j], w[j]);
    [meet(0, 1), meet(0, 2), meet(1, 2)]
}

/// Geometry of one `(e, k)` configuration, ready for rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub triangle: PlanarTriangle,
    /// Arcs on sides 1 (hypotenuse), 2 and 3, each bulging outward.
    pub arcs: [Vec<Point>; 3],
    pub envelope: PlanarTriangle,
    /// Right-angle vertex to the foot of the altitude.
    pub altitude: [Point; 2],
    pub centre: Point,
}

/// A named point list of a [`Scene`].
#[derive(Debug, Clone, PartialEq)]
pub struct Layer {
    pub name: &'static str,
    pub points: Vec<Point>,
    pub closed: bool,
}

impl Scene {
    /// Layers in drawing order: triangle, arcs 1–3, envelope, altitude, centre.
    pub fn layers(&self) -> Vec<Layer> {
        let tri = |name, t: &PlanarTriangle| Layer {
            name,
            points: t.vertices().to_vec(),
            closed: true,
        };
        let open = |name, points: &[Point]| Layer {
            name,
            points: points.to_vec(),
            closed: false,
        };
        vec![
            tri("triangle", &self.triangle),
            open("arc1", &self.arcs[0]),
            open("arc2", &self.arcs[1]),
            open("arc3", &self.arcs[2]),
            tri("envelope", &self.envelope),
            open("altitude", &self.altitude),
            open("centre", &[self.centre]),
        ]
    }

    /// Axis-aligned bounds `(min, max)` over every layer.
    pub fn bounds(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for layer in self.layers() {
            for p in layer.points {
                lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
                hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
            }
        }
        (lo, hi)
    }
}

/// Places the `(e, k)` arcs on the triangle's sides together with the
/// envelope, altitude and centre. Each arc has `samples + 1` points.
pub fn build_scene(tri: &PlanarTriangle, e: f64, k: f64, samples: usize) -> Result<Scene> {
    positive("k", k)?;
    let mut arcs: [Vec<Point>; 3] = Default::default();
    for (slot, (a, b)) in arcs.iter_mut().zip(tri.edges()) {
        let l = a.distance(b);
        let arc = construct_arc(l, l / k, e)?;
        let u = (b - a) * (1.0 / l);
        let n = outward_normal(a, b);
        let mid = a.midpoint(b);
        *slot = arc
            .sample_points(samples)?
            .into_iter()
            .map(|p| mid + u * p.x + n * p.y)
            .collect();
    }
    let (foot, _) = altitude_from_right_angle(tri);
    Ok(Scene {
        triangle: *tri,
        arcs,
        envelope: enveloping_triangle(tri, k)?,
        altitude: [tri.p1, foot],
        centre: pythagorean_centre(tri),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn near(p: Point, q: Point, tol: f64) -> bool {
        p.distance(q) <= tol
    }

    #[test]
    fn placement() {
        let t = place_triangle(4.0, 3.0).unwrap();
        assert_eq!(
            t.vertices(),
            [Point::ORIGIN, Point::new(4.0, 0.0), Point::new(0.0, 3.0)]
        );
        assert_eq!(t.sides(), [5.0, 4.0, 3.0]);
        assert_eq!(t.right_angle_defect(), 0.0);
        assert!(t.orientation() > 0.0);

        let iso = place_triangle(1.0, 1.0).unwrap();
        assert!((iso.sides()[0] - core::f64::consts::SQRT_2).abs() < 1e-15);
        assert!(place_triangle(-1.0, 1.0).is_err());
    }

    #[test]
    fn altitude_examples() {
        let t = place_triangle(4.0, 3.0).unwrap();
        let (foot, h1) = altitude_from_right_angle(&t);
        assert!(near(foot, Point::new(36.0 / 25.0, 48.0 / 25.0), 1e-15));
        assert!((h1 - 2.4).abs() < 1e-15);
        // foot on the hypotenuse segment
        let s = (foot - t.p2()).dot(t.p3() - t.p2()) / 25.0;
        assert!(s > 0.0 && s < 1.0);
        assert!((foot - t.p2()).cross(t.p3() - t.p2()).abs() < 1e-14);

        let (_, h1) = altitude_from_right_angle(&place_triangle(1.0, 1.0).unwrap());
        assert!((h1 - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn centre_examples() {
        let t = place_triangle(4.0, 3.0).unwrap();
        let c = pythagorean_centre(&t);
        assert!(near(c, Point::new(0.72, 0.96), 1e-15));
        let (foot, _) = altitude_from_right_angle(&t);
        assert!((c.distance(t.p1()) - c.distance(foot)).abs() < 1e-15);

        let c = pythagorean_centre(&place_triangle(1.0, 1.0).unwrap());
        assert!(near(c, Point::new(0.25, 0.25), 1e-15));
    }

    #[test]
    fn envelope_for_k8() {
        let t = place_triangle(4.0, 3.0).unwrap();
        let env = enveloping_triangle(&t, 8.0).unwrap();
        // legs move to y = -1/2 and x = -3/8
        assert!(near(env.p1(), Point::new(-0.375, -0.5), 1e-15));
        assert!((env.p1().distance(t.p1()) - 5.0 / 8.0).abs() < 1e-15);
        assert!((env.p1() - t.p1()).dot(t.p3() - t.p2()).abs() < 1e-14);
        assert!((env.scale_relative_to(&t) - 1.5208333333333333).abs() < 1e-12);
        assert!(env.right_angle_defect().abs() < 1e-12 * env.sides()[1] * env.sides()[2]);
    }

    #[test]
    fn envelope_collapses_for_large_k() {
        let t = place_triangle(4.0, 3.0).unwrap();
        let env = enveloping_triangle(&t, 1e8).unwrap();
        for (p, q) in t.vertices().iter().zip(env.vertices()) {
            assert!(p.distance(q) < 1e-6 * 5.0);
        }
    }

    #[test]
    fn ratio_examples() {
        let t = place_triangle(4.0, 3.0).unwrap();
        assert!((homothety_ratio(&t, 8.0).unwrap() - (1.0 + 10.0 / 19.2)).abs() < 1e-15);
        assert!((homothety_ratio(&t, 1e15).unwrap() - 1.0).abs() < 1e-14);
        let iso = place_triangle(1.0, 1.0).unwrap();
        assert!((homothety_ratio(&iso, 4.0).unwrap() - 2.0).abs() < 1e-15);
        assert!(homothety_ratio(&t, 0.0).is_err());
    }

    #[test]
    fn homothety_closes() {
        let t = place_triangle(4.0, 3.0).unwrap();
        let r = verify_homothety(&t, 8.0).unwrap();
        assert!(r.max_deviation < 1e-10 * 5.0);
        assert!(r.midpoint_deviation < 1e-10 * 5.0);
        assert!(r.ratio > 1.0);

        let r4 = verify_homothety(&t, 4.0).unwrap();
        assert_eq!(r4.centre, r.centre);

        let t = place_triangle(1.0, 2.0).unwrap();
        let r = verify_homothety(&t, 5.0).unwrap();
        let (_, h1) = altitude_from_right_angle(&t);
        assert_eq!(r.ratio, 1.0 + 2.0 * t.sides()[0] / (5.0 * h1));
    }

    #[test]
    fn clockwise_triangle_still_offsets_outward() {
        let t = PlanarTriangle::from_vertices_unchecked(
            Point::ORIGIN,
            Point::new(0.0, 3.0),
            Point::new(4.0, 0.0),
        );
        assert!(t.orientation() < 0.0);
        let r = verify_homothety(&t, 8.0).unwrap();
        assert!(r.max_deviation < 1e-12);
        assert!(r.enveloping.sides()[0] > t.sides()[0]);
    }

    #[test]
    fn scene_counts_and_contacts() {
        let t = place_triangle(4.0, 3.0).unwrap();
        let scene = build_scene(&t, 1.0, 8.0, 64).unwrap();
        assert!(scene.arcs.iter().all(|a| a.len() == 65));
        let tol = 1e-10 * 5.0;
        for ((a, b), arc) in t.edges().iter().zip(&scene.arcs) {
            assert!(near(arc[0], *a, tol));
            assert!(near(arc[64], *b, tol));
        }
        // hypotenuse apex sits f1 = 5/8 off the hypotenuse line
        let (a, b) = t.edges()[0];
        let apex = scene.arcs[0][32];
        let dist = (b - a).cross(apex - a).abs() / 5.0;
        assert!((dist - 0.625).abs() < tol);
        // and every apex lies on the matching envelope side
        for (arc, (ea, eb)) in scene.arcs.iter().zip(scene.envelope.edges()) {
            let apex = arc[32];
            let off = (eb - ea).cross(apex - ea).abs() / ea.distance(eb);
            assert!(off < tol);
        }
        assert_eq!(scene.layers().len(), 7);
    }

    #[test]
    fn circle_scene_matches_closed_form() {
        let t = place_triangle(4.0, 3.0).unwrap();
        let scene = build_scene(&t, 0.0, 8.0, 40).unwrap();
        for ((a, b), arc) in t.edges().iter().zip(&scene.arcs) {
            let l = a.distance(*b);
            let f = l / 8.0;
            let r = l * l / (8.0 * f) + f / 2.0;
            let half = libm::asin(l / (2.0 * r));
            let u = (*b - *a) * (1.0 / l);
            let n = outward_normal(*a, *b);
            let centre = a.midpoint(*b) - n * (r - f);
            for (i, p) in arc.iter().enumerate() {
                let phi = half * (2.0 * i as f64 - 40.0) / 40.0;
                let q = centre + u * (r * libm::sin(phi)) + n * (r * libm::cos(phi));
                assert!(near(*p, q, 1e-10));
            }
        }
    }

    #[test]
    fn axes_meet_at_centre() {
        let t = place_triangle(4.0, 3.0).unwrap();
        let env = enveloping_triangle(&t, 8.0).unwrap();
        let c = pythagorean_centre(&t);
        for p in homothety_axis_intersections(&t, &env) {
            assert!(near(p.unwrap(), c, 1e-10 * 5.0));
        }
    }
}
