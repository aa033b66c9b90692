//! SVG rendering of a [`Scene`].
//!
//! The y-axis is flipped so the picture has the usual mathematical
//! orientation. The viewBox is the scene's bounding box grown by 5% of its
//! extent on every side. Output depends only on the scene.

use std::fmt::Write;

use pyconic_core::{Layer, Point, Scene};

use crate::number::sig17;

const MARGIN: f64 = 0.05;

fn stroke_for(name: &str) -> &'static str {
    match name {
        "triangle" => "#000000",
        "arc1" => "#d62728",
        "arc2" => "#1f77b4",
        "arc3" => "#2ca02c",
        "envelope" => "#7f7f7f",
        "altitude" => "#9467bd",
        _ => "#ff7f0e",
    }
}

fn coord(p: Point) -> String {
    format!("{},{}", sig17(p.x), sig17(-p.y))
}

fn path_data(points: &[Point], closed: bool) -> String {
    let mut d = String::new();
    for (i, &p) in points.iter().enumerate() {
        d.push_str(if i == 0 { "M" } else { " L" });
        d.push_str(&coord(p));
    }
    if closed {
        d.push_str(" Z");
    }
    d
}

/// A small cross marking a single point.
fn marker_data(p: Point, size: f64) -> String {
    let h = Point::new(size, 0.0);
    let v = Point::new(0.0, size);
    format!(
        "M{} L{} M{} L{}",
        coord(p - h),
        coord(p + h),
        coord(p - v),
        coord(p + v)
    )
}

pub fn render(scene: &Scene) -> String {
    let (lo, hi) = scene.bounds();
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let (mx, my) = (MARGIN * w, MARGIN * h);
    let extent = w.max(h);
    let stroke_width = 0.003 * extent;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        sig17(lo.x - mx),
        sig17(-hi.y - my),
        sig17(w + 2.0 * mx),
        sig17(h + 2.0 * my)
    )
    .unwrap();
    writeln!(
        out,
        r#"<g fill="none" stroke-width="{}" stroke-linecap="round" stroke-linejoin="round">"#,
        sig17(stroke_width)
    )
    .unwrap();
    for Layer {
        name,
        points,
        closed,
    } in scene.layers()
    {
        let d = if points.len() == 1 {
            marker_data(points[0], 0.015 * extent)
        } else {
            path_data(&points, closed)
        };
        writeln!(
            out,
            r#"<path id="{name}" stroke="{}" d="{d}"/>"#,
            stroke_for(name)
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
