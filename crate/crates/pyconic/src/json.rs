//! JSON documents for arcs, arc lengths, verification reports and scenes.
//!
//! Serialization goes through serde_json with a formatter that writes every
//! float with [`sig17`](crate::number::sig17).

use std::io;

use pyconic_core::{ArcLengthResult, ConicArc, ConicTriple, HomothetyReport, Point, Scene};
use serde::Serialize;
use serde_json::ser::Formatter;

use crate::number::sig17;

struct Sig17Formatter;

impl Formatter for Sig17Formatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(sig17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Compact JSON with 17-significant-digit floats and a trailing newline.
pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17Formatter);
    value
        .serialize(&mut ser)
        .expect("in-memory serialization cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

fn xy(p: Point) -> [f64; 2] {
    [p.x, p.y]
}

#[derive(Serialize)]
pub struct ArcDoc {
    class: &'static str,
    e: f64,
    l: f64,
    f: f64,
    k: f64,
    a: Option<f64>,
    b: Option<f64>,
    c_focal: Option<f64>,
    m: f64,
    focal_length: Option<f64>,
    p: f64,
    s: f64,
    directrix_distance: Option<f64>,
    beta: f64,
    alpha: Option<f64>,
}

impl From<&ConicArc> for ArcDoc {
    fn from(arc: &ConicArc) -> Self {
        ArcDoc {
            class: arc.class().name(),
            e: arc.e(),
            l: arc.l(),
            f: arc.f(),
            k: arc.k(),
            a: arc.a(),
            b: arc.b(),
            c_focal: arc.c_focal(),
            m: arc.m(),
            focal_length: arc.focal_length(),
            p: arc.p(),
            s: arc.s(),
            directrix_distance: arc.directrix_distance(),
            beta: arc.beta(),
            alpha: arc.alpha(),
        }
    }
}

#[derive(Serialize)]
pub struct LengthDoc {
    length: f64,
    error_estimate: f64,
    evaluations: usize,
}

impl From<&ArcLengthResult> for LengthDoc {
    fn from(r: &ArcLengthResult) -> Self {
        LengthDoc {
            length: r.length,
            error_estimate: r.error_estimate,
            evaluations: r.evaluations,
        }
    }
}

#[derive(Serialize)]
pub struct VerifyDoc {
    e: f64,
    k: f64,
    l1: f64,
    l2: f64,
    l3: f64,
    c1: f64,
    c2: f64,
    c3: f64,
    residual: f64,
    threshold: f64,
    pass: bool,
}

impl VerifyDoc {
    pub fn new(triple: &ConicTriple, threshold: f64) -> Self {
        let [l1, l2, l3] = triple.arcs.map(|a| a.l());
        let [c1, c2, c3] = triple.lengths;
        VerifyDoc {
            e: triple.e,
            k: triple.k,
            l1,
            l2,
            l3,
            c1,
            c2,
            c3,
            residual: triple.residual,
            threshold,
            pass: triple.residual < threshold,
        }
    }
}

#[derive(Serialize)]
struct HomothetyDoc {
    k: f64,
    ratio: f64,
    enveloping: [[f64; 2]; 3],
    max_deviation: f64,
    midpoint_deviation: f64,
}

#[derive(Serialize)]
pub struct CentreDoc {
    vertices: [[f64; 2]; 3],
    altitude_foot: [f64; 2],
    h1: f64,
    centre: [f64; 2],
    homotheties: Vec<HomothetyDoc>,
}

impl CentreDoc {
    pub fn new(
        vertices: [Point; 3],
        foot: Point,
        h1: f64,
        centre: Point,
        reports: &[HomothetyReport],
    ) -> Self {
        CentreDoc {
            vertices: vertices.map(xy),
            altitude_foot: xy(foot),
            h1,
            centre: xy(centre),
            homotheties: reports
                .iter()
                .map(|r| HomothetyDoc {
                    k: r.k,
                    ratio: r.ratio,
                    enveloping: r.enveloping.vertices().map(xy),
                    max_deviation: r.max_deviation,
                    midpoint_deviation: r.midpoint_deviation,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct LayerDoc {
    name: &'static str,
    closed: bool,
    points: Vec<[f64; 2]>,
}

#[derive(Serialize)]
pub struct SceneDoc {
    e: f64,
    k: f64,
    layers: Vec<LayerDoc>,
}

impl SceneDoc {
    pub fn new(scene: &Scene, e: f64, k: f64) -> Self {
        SceneDoc {
            e,
            k,
            layers: scene
                .layers()
                .into_iter()
                .map(|l| LayerDoc {
                    name: l.name,
                    closed: l.closed,
                    points: l.points.into_iter().map(xy).collect(),
                })
                .collect(),
        }
    }
}
