//! SVG rendering for instances and their computed results.
//!
//! Figures are illustrations, not evidence: coordinates pass through `f64`
//! for display and the checks elsewhere never consume this output. Rendering
//! is deterministic for a given input. Unbounded function rays are clipped
//! to a padded bounding box around the finite features.

use crate::plf::{lower_envelope, PLFunction};
use crate::polygon::PolygonBooleanResult;
use crate::polygon::SimplePolygon;
use crate::rational::{Point2, Rational};

const CANVAS_W: f64 = 720.0;
const CANVAS_H: f64 = 540.0;
const MARGIN: f64 = 36.0;

const COLOR_INPUT1: &str = "#1f77b4";
const COLOR_INPUT2: &str = "#ff7f0e";
const COLOR_RESULT: &str = "#d62728";
const COLOR_FILL: &str = "#2ca02c";

struct Frame {
    x_min: f64,
    y_min: f64,
    scale: f64,
    x_off: f64,
    y_off: f64,
}

impl Frame {
    /// Uniform world-to-screen scale, drawing centered on the canvas.
    fn fit(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Frame {
        let w = (x_max - x_min).max(1e-9);
        let h = (y_max - y_min).max(1e-9);
        let scale = ((CANVAS_W - 2.0 * MARGIN) / w).min((CANVAS_H - 2.0 * MARGIN) / h);
        let x_off = (CANVAS_W - scale * w) / 2.0;
        let y_off = (CANVAS_H - scale * h) / 2.0;
        Frame {
            x_min,
            y_min,
            scale,
            x_off,
            y_off,
        }
    }

    fn map(&self, p: &Point2) -> (f64, f64) {
        let x = self.x_off + (p.x.to_f64() - self.x_min) * self.scale;
        // Flip y: world up is screen up.
        let y = CANVAS_H - self.y_off - (p.y.to_f64() - self.y_min) * self.scale;
        (x, y)
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.2}")
}

struct Bounds {
    x: (f64, f64),
    y: (f64, f64),
    any: bool,
}

impl Bounds {
    fn new() -> Bounds {
        Bounds {
            x: (f64::INFINITY, f64::NEG_INFINITY),
            y: (f64::INFINITY, f64::NEG_INFINITY),
            any: false,
        }
    }

    fn add(&mut self, p: &Point2) {
        let (x, y) = (p.x.to_f64(), p.y.to_f64());
        self.x.0 = self.x.0.min(x);
        self.x.1 = self.x.1.max(x);
        self.y.0 = self.y.0.min(y);
        self.y.1 = self.y.1.max(y);
        self.any = true;
    }

    fn padded(mut self) -> ((f64, f64), (f64, f64)) {
        if !self.any {
            return ((-1.0, 1.0), (-1.0, 1.0));
        }
        let pad_x = 0.12 * (self.x.1 - self.x.0).max(1.0);
        let pad_y = 0.12 * (self.y.1 - self.y.0).max(1.0);
        self.x.0 -= pad_x;
        self.x.1 += pad_x;
        self.y.0 -= pad_y;
        self.y.1 += pad_y;
        (self.x, self.y)
    }
}

fn svg_open(out: &mut String) {
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\">\n",
        w = CANVAS_W as u32,
        h = CANVAS_H as u32
    ));
    out.push_str(&format!(
        "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
        w = CANVAS_W as u32,
        h = CANVAS_H as u32
    ));
}

fn path_from(frame: &Frame, points: &[Point2], close: bool) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let (x, y) = frame.map(p);
        let cmd = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{cmd}{},{} ", fmt(x), fmt(y)));
    }
    if close {
        d.push('Z');
    } else {
        d.pop();
    }
    d
}

fn stroke_path(out: &mut String, d: &str, color: &str, width: f64, fill: Option<&str>) {
    let fill_attr = match fill {
        Some(c) => format!("fill=\"{c}\" fill-opacity=\"0.25\""),
        None => "fill=\"none\"".to_owned(),
    };
    out.push_str(&format!(
        "<path d=\"{d}\" {fill_attr} stroke=\"{color}\" stroke-width=\"{}\" \
         stroke-linejoin=\"round\"/>\n",
        fmt(width)
    ));
}

fn mark(out: &mut String, frame: &Frame, p: &Point2) {
    let (x, y) = frame.map(p);
    out.push_str(&format!(
        "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#111\"/>\n",
        fmt(x),
        fmt(y)
    ));
}

/// Sampled polyline for one function over `[x_lo, x_hi]`, rays clipped at
/// the interval ends.
fn plf_polyline(f: &PLFunction, x_lo: &Rational, x_hi: &Rational) -> Vec<Point2> {
    let mut pts = vec![Point2::new(x_lo.clone(), f.eval(x_lo))];
    for v in f.vertices() {
        if v.x > *x_lo && v.x < *x_hi {
            pts.push(v.clone());
        }
    }
    pts.push(Point2::new(x_hi.clone(), f.eval(x_hi)));
    pts
}

/// Both inputs, their lower envelope, and the envelope breakpoints.
pub fn render_envelope_svg(f1: &PLFunction, f2: &PLFunction) -> String {
    let (env, decomp) = lower_envelope(f1, f2);

    let mut xs: Vec<&Rational> = Vec::new();
    for f in [f1, f2] {
        xs.extend(f.vertices().iter().map(|v| &v.x));
        xs.extend(f.anchor().map(|a| &a.x));
    }
    xs.extend(decomp.breakpoints.iter().map(|p| &p.x));
    let x_min = xs
        .iter()
        .min()
        .cloned()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let x_max = xs
        .iter()
        .max()
        .cloned()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let span = x_max.clone() - x_min.clone();
    let pad = std::cmp::max(span * Rational::ratio(3, 25), Rational::one());
    let x_lo = x_min - pad.clone();
    let x_hi = x_max + pad;

    let lines = [
        (plf_polyline(f1, &x_lo, &x_hi), COLOR_INPUT1, 1.5),
        (plf_polyline(f2, &x_lo, &x_hi), COLOR_INPUT2, 1.5),
    ];
    let env_line = plf_polyline(&env, &x_lo, &x_hi);

    // The y range comes from everything actually drawn, so clipped ray
    // endpoints stay inside the frame.
    let mut full = Bounds::new();
    for (pts, _, _) in &lines {
        for p in pts {
            full.add(p);
        }
    }
    for p in &env_line {
        full.add(p);
    }
    let ((fx0, fx1), (fy0, fy1)) = full.padded();
    let frame = Frame::fit(fx0, fx1, fy0, fy1);

    let mut out = String::new();
    svg_open(&mut out);
    for (pts, color, width) in &lines {
        stroke_path(
            &mut out,
            &path_from(&frame, pts, false),
            color,
            *width,
            None,
        );
    }
    stroke_path(
        &mut out,
        &path_from(&frame, &env_line, false),
        COLOR_RESULT,
        2.5,
        None,
    );
    for p in &decomp.breakpoints {
        mark(&mut out, &frame, p);
    }
    out.push_str("</svg>\n");
    out
}

/// Both input polygons, the boolean result components, and the result
/// vertices.
pub fn render_polygons_svg(
    p1: &SimplePolygon,
    p2: &SimplePolygon,
    result: &PolygonBooleanResult,
) -> String {
    let mut b = Bounds::new();
    for poly in [p1, p2] {
        for v in poly.vertices() {
            b.add(v);
        }
    }
    for comp in &result.components {
        for v in comp.polygon.vertices() {
            b.add(v);
        }
    }
    let ((fx0, fx1), (fy0, fy1)) = b.padded();
    let frame = Frame::fit(fx0, fx1, fy0, fy1);

    let mut out = String::new();
    svg_open(&mut out);
    for comp in &result.components {
        stroke_path(
            &mut out,
            &path_from(&frame, comp.polygon.vertices(), true),
            COLOR_FILL,
            2.5,
            Some(COLOR_FILL),
        );
    }
    stroke_path(
        &mut out,
        &path_from(&frame, p1.vertices(), true),
        COLOR_INPUT1,
        1.5,
        None,
    );
    stroke_path(
        &mut out,
        &path_from(&frame, p2.vertices(), true),
        COLOR_INPUT2,
        1.5,
        None,
    );
    for comp in &result.components {
        for v in comp.polygon.vertices() {
            mark(&mut out, &frame, v);
        }
    }
    out.push_str("</svg>\n");
    out
}
