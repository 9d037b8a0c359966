//! SVG figure: curve, tangent at A, and optionally the secant AB with the
//! Δx, Δy and dy segments.
//!
//! Every geometric quantity is computed exactly; floats appear only when
//! mapping to pixels. Each drawn element carries its data-space coordinates
//! in `data-*` attributes so the picture can be checked numerically.

use std::fmt::Write as _;

use serde_json::{json, Value};
use tangent_core::{derive_poly, increment, Polynomial, Rational};

pub const CURVE_SAMPLES: usize = 512;
const MARGIN: f64 = 40.0;

pub struct PlotSpec<'a> {
    pub f: &'a Polynomial,
    pub p: Rational,
    pub lo: Rational,
    pub hi: Rational,
    pub dx: Option<Rational>,
    pub width: u32,
    pub height: u32,
}

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x_min) / (self.x_max - self.x_min) * (self.width - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        self.height - MARGIN - (y - self.y_min) / (self.y_max - self.y_min) * (self.height - 2.0 * MARGIN)
    }
}

fn segment(out: &mut String, frame: &Frame, class: &str, from: (f64, f64), to: (f64, f64), extra: &str) {
    writeln!(
        out,
        r#"  <line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" data-x1="{}" data-y1="{}" data-x2="{}" data-y2="{}"{extra}/>"#,
        frame.px(from.0),
        frame.py(from.1),
        frame.px(to.0),
        frame.py(to.1),
        from.0,
        from.1,
        to.0,
        to.1,
    )
    .unwrap();
}

fn label(out: &mut String, frame: &Frame, class: &str, at: (f64, f64), offset: (f64, f64), text: &str) {
    writeln!(
        out,
        r#"  <text class="{class}" x="{:.2}" y="{:.2}">{text}</text>"#,
        frame.px(at.0) + offset.0,
        frame.py(at.1) + offset.1,
    )
    .unwrap();
}

fn point(out: &mut String, frame: &Frame, class: &str, at: (f64, f64)) {
    writeln!(
        out,
        r#"  <circle class="{class}" cx="{:.2}" cy="{:.2}" r="4" data-x="{}" data-y="{}"/>"#,
        frame.px(at.0),
        frame.py(at.1),
        at.0,
        at.1,
    )
    .unwrap();
}

fn pair(x: &Rational, y: &Rational) -> (f64, f64) {
    (x.to_f64(), y.to_f64())
}

/// Returns the SVG document and a JSON summary of the exact geometry.
pub fn render(spec: &PlotSpec) -> (String, Value) {
    let f = spec.f;
    let p = &spec.p;
    let fp = f.eval(p);
    let k = derive_poly(f).eval(p);
    let b = &fp - &(&k * p);
    let tangent_y = |x: &Rational| &(&k * x) + &b;

    // curve samples, exact abscissae
    let span = &spec.hi - &spec.lo;
    let last = Rational::from((CURVE_SAMPLES - 1) as i64);
    let samples: Vec<(f64, f64)> = (0..CURVE_SAMPLES)
        .map(|i| {
            let t = Rational::from(i as i64).checked_div(&last).expect("nonzero");
            let x = &spec.lo + &(&span * &t);
            pair(&x, &f.eval(&x))
        })
        .collect();

    let tan_from = (spec.lo.clone(), tangent_y(&spec.lo));
    let tan_to = (spec.hi.clone(), tangent_y(&spec.hi));

    struct Secant {
        b: (Rational, Rational),
        dy_inc: Rational,
        dy_diff: Rational,
        dx: Rational,
    }
    let secant = spec.dx.as_ref().filter(|dx| !dx.is_zero()).map(|dx| {
        let bx = p + dx;
        let dy_inc = increment(f, p, dx);
        let dy_diff = &k * dx;
        Secant {
            b: (bx, &fp + &dy_inc),
            dy_inc,
            dy_diff,
            dx: dx.clone(),
        }
    });

    let mut ys: Vec<f64> = samples.iter().map(|s| s.1).collect();
    ys.push(tan_from.1.to_f64());
    ys.push(tan_to.1.to_f64());
    ys.push(fp.to_f64());
    let mut xs = vec![spec.lo.to_f64(), spec.hi.to_f64(), p.to_f64()];
    if let Some(s) = &secant {
        ys.push(s.b.1.to_f64());
        ys.push((&fp + &s.dy_diff).to_f64());
        xs.push(s.b.0.to_f64());
    }
    let fold = |v: &[f64]| {
        v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &y| (lo.min(y), hi.max(y)))
    };
    let (mut y_min, mut y_max) = fold(&ys);
    if y_max - y_min < 1e-12 {
        y_min -= 1.0;
        y_max += 1.0;
    }
    let pad = (y_max - y_min) * 0.05;
    let (x_min, x_max) = fold(&xs);
    let frame = Frame {
        x_min,
        x_max,
        y_min: y_min - pad,
        y_max: y_max + pad,
        width: spec.width as f64,
        height: spec.height as f64,
    };

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height
    )
    .unwrap();
    writeln!(
        out,
        "  <style>.curve{{fill:none;stroke:#1f4e9c;stroke-width:2}}.tangent{{stroke:#c0392b;stroke-width:1.5}}\
.secant{{stroke:#27ae60;stroke-width:1.5;stroke-dasharray:6 4}}.delta-x,.delta-y{{stroke:#555;stroke-width:1.5}}\
.differential{{stroke:#8e44ad;stroke-width:2.5}}.axis{{stroke:#999;stroke-width:1}}text{{font-family:sans-serif;font-size:14px}}</style>"
    )
    .unwrap();
    writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        out,
        r#"  <text class="title" x="{MARGIN}" y="24">f(x) = {}; tangent at x = {}: y = {}</text>"#,
        f,
        p,
        Polynomial::from_coeffs(vec![b.clone(), k.clone()])
    )
    .unwrap();

    if frame.y_min <= 0.0 && 0.0 <= frame.y_max {
        segment(&mut out, &frame, "axis", (x_min, 0.0), (x_max, 0.0), "");
    }
    if x_min <= 0.0 && 0.0 <= x_max {
        segment(&mut out, &frame, "axis", (0.0, frame.y_min), (0.0, frame.y_max), "");
    }

    let mut d = String::new();
    for (i, (x, y)) in samples.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        write!(d, "{cmd}{:.2},{:.2} ", frame.px(*x), frame.py(*y)).unwrap();
    }
    writeln!(
        out,
        r#"  <path class="curve" d="{}" data-samples="{CURVE_SAMPLES}"/>"#,
        d.trim_end()
    )
    .unwrap();

    segment(
        &mut out,
        &frame,
        "tangent",
        pair(&tan_from.0, &tan_from.1),
        pair(&tan_to.0, &tan_to.1),
        &format!(r#" data-slope="{}""#, k.to_f64()),
    );

    let a = pair(p, &fp);
    point(&mut out, &frame, "point-a", a);
    label(&mut out, &frame, "label", a, (-14.0, -8.0), "A");

    if let Some(s) = &secant {
        let bpt = pair(&s.b.0, &s.b.1);
        segment(&mut out, &frame, "secant", a, bpt, "");
        point(&mut out, &frame, "point-b", bpt);
        label(&mut out, &frame, "label", bpt, (8.0, -8.0), "B");

        let corner = pair(&s.b.0, &fp);
        let length = |r: &Rational| format!(r#" data-length="{}""#, r.abs().to_f64());
        segment(&mut out, &frame, "delta-x", a, corner, &length(&s.dx));
        segment(&mut out, &frame, "delta-y", corner, bpt, &length(&s.dy_inc));
        let dy_top = pair(&s.b.0, &(&fp + &s.dy_diff));
        segment(&mut out, &frame, "differential", corner, dy_top, &length(&s.dy_diff));

        let mid_x = ((a.0 + corner.0) / 2.0, a.1);
        label(&mut out, &frame, "label", mid_x, (-8.0, 18.0), "Δx");
        let mid_dy = (corner.0, (corner.1 + bpt.1) / 2.0);
        label(&mut out, &frame, "label", mid_dy, (8.0, 0.0), "Δy");
        let mid_diff = (corner.0, (corner.1 + dy_top.1) / 2.0);
        label(&mut out, &frame, "label", mid_diff, (-26.0, 0.0), "dy");
    }
    out.push_str("</svg>\n");

    let summary = json!({
        "width": spec.width,
        "height": spec.height,
        "range": [spec.lo.to_string(), spec.hi.to_string()],
        "curve_samples": CURVE_SAMPLES,
        "point": [p.to_string(), fp.to_string()],
        "tangent": {
            "k": k.to_string(),
            "b": b.to_string(),
            "from": [tan_from.0.to_string(), tan_from.1.to_string()],
            "to": [tan_to.0.to_string(), tan_to.1.to_string()],
        },
        "secant": secant.as_ref().map(|s| json!({
            "b": [s.b.0.to_string(), s.b.1.to_string()],
            "dx": s.dx.to_string(),
            "delta_y": s.dy_inc.to_string(),
            "dy": s.dy_diff.to_string(),
        })),
    });
    (out, summary)
}
