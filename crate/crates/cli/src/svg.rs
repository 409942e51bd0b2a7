//! SVG drawings of planar polytopes, laid out left to right.

use std::fmt::Write;

use num_traits::ToPrimitive;

use toric_core::Polyhedron;

const UNIT: f64 = 40.0;
const PAD: f64 = 1.0;
const CAPTION: f64 = 24.0;

fn coords(p: &Polyhedron) -> Vec<(f64, f64)> {
    p.vertices()
        .iter()
        .map(|v| (v[0].to_f64().unwrap_or(0.0), v[1].to_f64().unwrap_or(0.0)))
        .collect()
}

/// Vertices in counter-clockwise order around their centroid.
fn boundary(p: &Polyhedron) -> Vec<(f64, f64)> {
    let mut pts = coords(p);
    let n = pts.len() as f64;
    let cx = pts.iter().map(|v| v.0).sum::<f64>() / n;
    let cy = pts.iter().map(|v| v.1).sum::<f64>() / n;
    pts.sort_by(|a, b| {
        let ta = (a.1 - cy).atan2(a.0 - cx);
        let tb = (b.1 - cy).atan2(b.0 - cx);
        ta.total_cmp(&tb)
    });
    pts
}

/// Renders bounded nonempty polytopes in the plane with a caption each.
/// Every panel shows the lattice points of its padded bounding box and the
/// origin is marked.
pub fn render(panels: &[(String, &Polyhedron)]) -> Result<String, String> {
    for (caption, p) in panels {
        if p.dim() != 2 {
            return Err(format!("{caption}: svg output needs dimension 2, got {}", p.dim()));
        }
        if p.is_empty() || !p.is_bounded() {
            return Err(format!("{caption}: svg output needs a nonempty polytope"));
        }
    }
    let boxes: Vec<(i64, i64, i64, i64)> = panels
        .iter()
        .map(|(_, p)| {
            let c = coords(p);
            let fold = |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| {
                c.iter().map(pick).fold(init, f)
            };
            let x0 = fold(f64::min, 0.0, |v| v.0).floor() as i64 - PAD as i64;
            let x1 = fold(f64::max, 0.0, |v| v.0).ceil() as i64 + PAD as i64;
            let y0 = fold(f64::min, 0.0, |v| v.1).floor() as i64 - PAD as i64;
            let y1 = fold(f64::max, 0.0, |v| v.1).ceil() as i64 + PAD as i64;
            (x0, x1, y0, y1)
        })
        .collect();
    let width: f64 = boxes.iter().map(|b| (b.1 - b.0) as f64 * UNIT).sum();
    let height = boxes.iter().map(|b| (b.3 - b.2) as f64 * UNIT).fold(0.0, f64::max) + CAPTION;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let mut left = 0.0;
    for ((caption, p), &(x0, x1, y0, y1)) in panels.iter().zip(&boxes) {
        let tx = |x: f64| left + (x - x0 as f64) * UNIT;
        let ty = |y: f64| (y1 as f64 - y) * UNIT;
        writeln!(out, "<g>").unwrap();
        for gx in x0..=x1 {
            for gy in y0..=y1 {
                let fill = if gx == 0 && gy == 0 { "black" } else { "#bbb" };
                writeln!(
                    out,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="2" fill="{fill}"/>"#,
                    tx(gx as f64),
                    ty(gy as f64)
                )
                .unwrap();
            }
        }
        let pts: Vec<String> = boundary(p)
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", tx(x), ty(y)))
            .collect();
        writeln!(
            out,
            r##"<polygon points="{}" fill="#4a90d9" fill-opacity="0.35" stroke="#1f4e8c" stroke-width="2"/>"##,
            pts.join(" ")
        )
        .unwrap();
        for (x, y) in coords(p) {
            writeln!(out, r##"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="#1f4e8c"/>"##, tx(x), ty(y)).unwrap();
        }
        writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
            left + (x1 - x0) as f64 * UNIT / 2.0,
            height - 6.0,
            escape(caption)
        )
        .unwrap();
        writeln!(out, "</g>").unwrap();
        left += (x1 - x0) as f64 * UNIT;
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
