//! SVG pictures of placements: the region, guards as hollow circles, and
//! optionally every dark ray clipped to the view. Drawing is the one place
//! coordinates become floats.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::geom::{Point2, Rat};
use crate::io::{PlacementDocument, Region};

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    pub show_dark_rays: bool,
    /// World window `[xmin, ymin, xmax, ymax]`; the padded bounding box if unset.
    pub zoom: Option<[f64; 4]>,
    /// Image width in pixels.
    pub width: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            show_dark_rays: false,
            zoom: None,
            width: 800.0,
        }
    }
}

fn f(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn fp(p: &Point2) -> (f64, f64) {
    (f(&p.x), f(&p.y))
}

/// Parameter range of `o + t d`, `t >= 0`, inside the window.
fn clip(o: (f64, f64), d: (f64, f64), w: &[f64; 4]) -> Option<(f64, f64)> {
    let (mut lo, mut hi) = (0.0f64, f64::INFINITY);
    for (p, q) in [
        (-d.0, o.0 - w[0]),
        (d.0, w[2] - o.0),
        (-d.1, o.1 - w[1]),
        (d.1, w[3] - o.1),
    ] {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
        } else {
            let t = q / p;
            if p < 0.0 {
                lo = lo.max(t);
            } else {
                hi = hi.min(t);
            }
        }
    }
    (lo < hi && hi.is_finite()).then_some((lo, hi))
}

fn auto_window(doc: &PlacementDocument) -> [f64; 4] {
    let mut pts: Vec<(f64, f64)> = doc.guards.iter().map(fp).collect();
    match &doc.region {
        Region::Convex(p) => pts.extend(p.vertices().iter().map(fp)),
        Region::Simple(p) => pts.extend(p.vertices().iter().map(fp)),
        Region::Wedge(w) => {
            let a = fp(w.apex());
            pts.push(a);
            for d in [w.dir1(), w.dir2()] {
                pts.push((a.0 + f(&d.x), a.1 + f(&d.y)));
            }
        }
    }
    let mut w = [
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    ];
    for (x, y) in pts {
        w = [w[0].min(x), w[1].min(y), w[2].max(x), w[3].max(y)];
    }
    let pad = 0.05 * (w[2] - w[0]).max(w[3] - w[1]).max(1e-9);
    [w[0] - pad, w[1] - pad, w[2] + pad, w[3] + pad]
}

/// Deterministic SVG 1.1 document.
pub fn render(doc: &PlacementDocument, opts: &RenderOptions) -> String {
    let w = opts.zoom.unwrap_or_else(|| auto_window(doc));
    let scale = opts.width / (w[2] - w[0]);
    let height = (w[3] - w[1]) * scale;
    let px = |(x, y): (f64, f64)| ((x - w[0]) * scale, (w[3] - y) * scale);
    let inside = |(x, y): (f64, f64)| x >= w[0] && x <= w[2] && y >= w[1] && y <= w[3];

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.3}" height="{:.3}" viewBox="0 0 {:.3} {:.3}">"#,
        opts.width, height, opts.width, height
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{:.3}" height="{:.3}" fill="white"/>"#,
        opts.width, height
    );

    let outline: Vec<(f64, f64)> = match &doc.region {
        Region::Convex(p) => p.vertices().iter().map(fp).collect(),
        Region::Simple(p) => p.vertices().iter().map(fp).collect(),
        Region::Wedge(_) => Vec::new(),
    };
    if !outline.is_empty() {
        let pts: Vec<String> = outline
            .iter()
            .map(|&q| {
                let (x, y) = px(q);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polygon class="region" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            pts.join(" ")
        );
    }
    if let Region::Wedge(wedge) = &doc.region {
        let a = fp(wedge.apex());
        for d in [wedge.dir1(), wedge.dir2()] {
            if let Some((t0, t1)) = clip(a, (f(&d.x), f(&d.y)), &w) {
                let (x0, y0) = px((a.0 + t0 * f(&d.x), a.1 + t0 * f(&d.y)));
                let (x1, y1) = px((a.0 + t1 * f(&d.x), a.1 + t1 * f(&d.y)));
                let _ = writeln!(
                    out,
                    r#"<line class="region" x1="{x0:.3}" y1="{y0:.3}" x2="{x1:.3}" y2="{y1:.3}" stroke="black" stroke-width="1.5"/>"#
                );
            }
        }
    }

    if opts.show_dark_rays {
        for (i, a) in doc.guards.iter().enumerate() {
            for (j, b) in doc.guards.iter().enumerate() {
                if i == j {
                    continue;
                }
                let o = fp(a);
                let from = fp(b);
                let d = (o.0 - from.0, o.1 - from.1);
                if let Some((t0, t1)) = clip(o, d, &w) {
                    let (x0, y0) = px((o.0 + t0 * d.0, o.1 + t0 * d.1));
                    let (x1, y1) = px((o.0 + t1 * d.0, o.1 + t1 * d.1));
                    let _ = writeln!(
                        out,
                        r#"<line class="dark-ray" x1="{x0:.3}" y1="{y0:.3}" x2="{x1:.3}" y2="{y1:.3}" stroke="gray" stroke-width="0.5"/>"#
                    );
                }
            }
        }
    }

    for g in &doc.guards {
        let q = fp(g);
        if !inside(q) {
            continue;
        }
        let (x, y) = px(q);
        let _ = writeln!(
            out,
            r#"<circle class="guard" cx="{x:.3}" cy="{y:.3}" r="4" fill="none" stroke="black" stroke-width="1.2"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}
