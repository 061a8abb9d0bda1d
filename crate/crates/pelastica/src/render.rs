//! Minimal SVG rendering of curves: closed paths with optional dashed
//! overlays (chords, segments), fixed viewport padded by 10%. Output
//! carries no timestamps or other run metadata, so identical inputs render
//! byte-identically.

use crate::geom::Vec2;
use std::fmt::Write as _;

pub struct Style {
    pub stroke: &'static str,
    pub width: f64,
    pub dashed: bool,
}

impl Style {
    pub fn solid(stroke: &'static str) -> Style {
        Style {
            stroke,
            width: 1.0,
            dashed: false,
        }
    }

    pub fn dashed(stroke: &'static str) -> Style {
        Style {
            stroke,
            width: 1.0,
            dashed: true,
        }
    }
}

/// A drawable: a polyline (closed if `closed`) with a style.
pub struct Shape {
    pub points: Vec<Vec2>,
    pub closed: bool,
    pub style: Style,
}

/// Render shapes into an SVG document string. The viewport is the joint
/// bounding box padded by 10%; the y-axis points up.
pub fn render(shapes: &[Shape]) -> String {
    let mut min = Vec2::new(f64::INFINITY, f64::INFINITY);
    let mut max = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for s in shapes {
        for p in &s.points {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
    }
    if !min.is_finite() || !max.is_finite() {
        min = Vec2::new(-1.0, -1.0);
        max = Vec2::new(1.0, 1.0);
    }
    let span = (max - min).norm().max(1e-9);
    let pad = 0.1 * span;
    let (x0, y0) = (min.x - pad, min.y - pad);
    let (w, h) = (max.x - min.x + 2.0 * pad, max.y - min.y + 2.0 * pad);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}" width="640" height="640">"#,
        x0,
        -y0 - h,
        w,
        h
    );
    let _ = writeln!(out, r#"<g fill="none" stroke-linejoin="round">"#);
    let stroke_w = 0.004 * span;
    for s in shapes {
        if s.points.is_empty() {
            continue;
        }
        let mut d = String::new();
        for (i, p) in s.points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{:.6} {:.6} ", p.x, -p.y);
        }
        if s.closed {
            d.push('Z');
        }
        let dash = if s.style.dashed {
            format!(
                r#" stroke-dasharray="{:.6} {:.6}""#,
                3.0 * stroke_w,
                2.0 * stroke_w
            )
        } else {
            String::new()
        };
        let _ = writeln!(
            out,
            r#"<path d="{}" stroke="{}" stroke-width="{:.6}"{} />"#,
            d.trim_end(),
            s.style.stroke,
            s.style.width * stroke_w,
            dash
        );
    }
    let _ = writeln!(out, "</g>\n</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn deterministic_and_well_formed() {
        let c = generators::circle(1.0, 64);
        let pts = c.vertices(Vec2::ZERO);
        let shapes = vec![
            Shape {
                points: pts.clone(),
                closed: true,
                style: Style::solid("#1f77b4"),
            },
            Shape {
                points: vec![pts[0], pts[32]],
                closed: false,
                style: Style::dashed("#d62728"),
            },
        ];
        let a = render(&shapes);
        let b = render(&shapes);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains("stroke-dasharray"));
        assert!(a.trim_end().ends_with("</svg>"));
    }
}
