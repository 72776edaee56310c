use std::fmt::Write;

use num_bigint::BigInt;

use super::{AtlasWindow, FeatureKind, SolutionFeature};
use crate::exactnum::Rat;
use crate::geometry::PlanePoint;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 56.0;

struct Viewport<'a> {
    window: &'a AtlasWindow,
    x0: f64,
    y0: f64,
    sx: f64,
    sy: f64,
}

impl<'a> Viewport<'a> {
    fn new(window: &'a AtlasWindow) -> Self {
        let (x0, x1) = (window.xmin.to_f64(), window.xmax.to_f64());
        let (y0, y1) = (window.ymin.to_f64(), window.ymax.to_f64());
        Viewport {
            window,
            x0,
            y0,
            sx: (WIDTH - 2.0 * MARGIN) / (x1 - x0),
            sy: (HEIGHT - 2.0 * MARGIN) / (y1 - y0),
        }
    }

    fn px(&self, x: &Rat) -> f64 {
        MARGIN + (x.to_f64() - self.x0) * self.sx
    }

    fn py(&self, y: &Rat) -> f64 {
        HEIGHT - MARGIN - (y.to_f64() - self.y0) * self.sy
    }

    fn point(&self, p: &PlanePoint) -> String {
        format!("{:.2},{:.2}", self.px(&p.x), self.py(&p.y))
    }
}

fn integers_between(lo: &Rat, hi: &Rat) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut k = lo.ceil();
    let top = hi.floor();
    while k <= top {
        out.push(k.clone());
        k += 1;
    }
    out
}

fn axes(out: &mut String, view: &Viewport) {
    let w = view.window;
    let (left, right) = (view.px(&w.xmin), view.px(&w.xmax));
    let (bottom, top) = (view.py(&w.ymin), view.py(&w.ymax));
    let _ = writeln!(
        out,
        r##"<rect x="{left:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#000" stroke-width="1"/>"##,
        right - left,
        bottom - top
    );
    for k in integers_between(&w.xmin, &w.xmax) {
        let x = view.px(&Rat::from_int(k.clone()));
        let _ = writeln!(
            out,
            r##"<line x1="{x:.2}" y1="{bottom:.2}" x2="{x:.2}" y2="{:.2}" stroke="#000"/><text x="{x:.2}" y="{:.2}" font-size="12" text-anchor="middle">{k}</text>"##,
            bottom + 5.0,
            bottom + 18.0
        );
    }
    for k in integers_between(&w.ymin, &w.ymax) {
        let y = view.py(&Rat::from_int(k.clone()));
        let _ = writeln!(
            out,
            r##"<line x1="{:.2}" y1="{y:.2}" x2="{left:.2}" y2="{y:.2}" stroke="#000"/><text x="{:.2}" y="{:.2}" font-size="12" text-anchor="end">{k}</text>"##,
            left - 5.0,
            left - 8.0,
            y + 4.0
        );
    }
    let (xlabel, ylabel) = w.frame.axis_labels();
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="14" text-anchor="middle">{xlabel}</text>"#,
        (left + right) / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        out,
        r#"<text x="16" y="{:.2}" font-size="14" text-anchor="middle" transform="rotate(-90 16 {:.2})">{ylabel}</text>"#,
        (top + bottom) / 2.0,
        (top + bottom) / 2.0
    );
}

/// Deterministic SVG: curves as blue polylines, segments as red lines,
/// sporadic points as filled red circles.
pub fn render_svg(features: &[SolutionFeature], window: &AtlasWindow) -> String {
    let view = Viewport::new(window);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#fff"/>"##);
    axes(&mut out, &view);
    let _ = writeln!(
        out,
        r#"<clipPath id="plot"><rect x="{MARGIN}" y="{MARGIN}" width="{:.2}" height="{:.2}"/></clipPath>"#,
        WIDTH - 2.0 * MARGIN,
        HEIGHT - 2.0 * MARGIN
    );
    let _ = writeln!(out, r#"<g clip-path="url(#plot)">"#);
    for feature in features {
        match &feature.kind {
            FeatureKind::CurveCaseI { m, n } => {
                let points: Vec<String> = feature.geometry.iter().map(|p| view.point(p)).collect();
                let _ = writeln!(
                    out,
                    r##"<polyline class="case-i" data-m="{m}" data-n="{n}" points="{}" fill="none" stroke="#1f4fd1" stroke-width="1"/>"##,
                    points.join(" ")
                );
            }
            FeatureKind::SegmentCaseII { p, q } => {
                let (a, b) = (&feature.geometry[0], &feature.geometry[feature.geometry.len() - 1]);
                let _ = writeln!(
                    out,
                    r##"<line class="case-ii" data-p="{p}" data-q="{q}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#d12f1f" stroke-width="1.5"/>"##,
                    view.px(&a.x),
                    view.py(&a.y),
                    view.px(&b.x),
                    view.py(&b.y)
                );
            }
            FeatureKind::SporadicPoint { alpha, beta, .. } => {
                let c = &feature.geometry[0];
                let _ = writeln!(
                    out,
                    r##"<circle class="sporadic" data-alpha="{alpha}" data-beta="{beta}" cx="{:.2}" cy="{:.2}" r="2.5" fill="#d12f1f"/>"##,
                    view.px(&c.x),
                    view.py(&c.y)
                );
            }
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}
