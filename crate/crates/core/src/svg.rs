//! Static SVG rendering of a polygon, its lattice grid and width strip.
//! Coordinates are rendered as floats; this output is for viewing only.

use std::fmt::Write as _;
use std::path::Path;

use num_traits::ToPrimitive;

use crate::error::Result;
use crate::geometry::{Point, Polygon, Rational};
use crate::width::WidthCertificate;

const CELL: f64 = 40.0;
const MARGIN: f64 = 1.0;

fn f(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

pub fn render_svg(p: &Polygon, cert: Option<&WidthCertificate>) -> String {
    let xs: Vec<f64> = p.vertices().iter().map(|v| f(&v.x)).collect();
    let ys: Vec<f64> = p.vertices().iter().map(|v| f(&v.y)).collect();
    let fold = |v: &[f64], init: f64, g: fn(f64, f64) -> f64| v.iter().copied().fold(init, g);
    let x0 = fold(&xs, f64::INFINITY, f64::min).floor() - MARGIN;
    let x1 = fold(&xs, f64::NEG_INFINITY, f64::max).ceil() + MARGIN;
    let y0 = fold(&ys, f64::INFINITY, f64::min).floor() - MARGIN;
    let y1 = fold(&ys, f64::NEG_INFINITY, f64::max).ceil() + MARGIN;
    let width = (x1 - x0) * CELL;
    let height = (y1 - y0) * CELL;
    // y axis points up in the plane, down in SVG
    let sx = |x: f64| (x - x0) * CELL;
    let sy = |y: f64| (y1 - y) * CELL;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let _ = writeln!(out, r##"<g stroke="#ddd" stroke-width="1">"##);
    let mut x = x0;
    while x <= x1 {
        let _ = writeln!(out, r#"<line x1="{0}" y1="0" x2="{0}" y2="{height}"/>"#, sx(x));
        x += 1.0;
    }
    let mut y = y0;
    while y <= y1 {
        let _ = writeln!(out, r#"<line x1="0" y1="{0}" x2="{width}" y2="{0}"/>"#, sy(y));
        y += 1.0;
    }
    let _ = writeln!(out, "</g>");

    let mut lattice = String::new();
    let mut gx = x0;
    while gx <= x1 {
        let mut gy = y0;
        while gy <= y1 {
            let _ = write!(lattice, r#"<circle cx="{}" cy="{}" r="2"/>"#, sx(gx), sy(gy));
            gy += 1.0;
        }
        gx += 1.0;
    }
    let _ = writeln!(out, r##"<g fill="#999">{lattice}</g>"##);

    if let Some(c) = cert {
        let a = c.direction.a.to_f64().unwrap_or(0.0);
        let b = c.direction.b.to_f64().unwrap_or(0.0);
        let hi = f(&p.support(&c.direction));
        let lo = -f(&p.support(&-&c.direction));
        for level in [lo, hi] {
            if let Some((p1, p2)) = clip_line(a, b, level, (x0, x1, y0, y1)) {
                let _ = writeln!(
                    out,
                    r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c33" stroke-width="2" stroke-dasharray="6 4"/>"##,
                    sx(p1.0),
                    sy(p1.1),
                    sx(p2.0),
                    sy(p2.1)
                );
            }
        }
        let _ = writeln!(
            out,
            r##"<text x="6" y="18" font-family="sans-serif" font-size="14" fill="#c33">width {} along ({}, {})</text>"##,
            c.width, c.direction.a, c.direction.b
        );
    }

    let pts: Vec<String> = p.vertices().iter().map(|v: &Point| format!("{},{}", sx(f(&v.x)), sy(f(&v.y)))).collect();
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="#3366cc" fill-opacity="0.25" stroke="#3366cc" stroke-width="2"/>"##,
        pts.join(" ")
    );
    out.push_str("</svg>\n");
    out
}

/// Segment of `a·x + b·y = level` inside the box.
fn clip_line(a: f64, b: f64, level: f64, (x0, x1, y0, y1): (f64, f64, f64, f64)) -> Option<((f64, f64), (f64, f64))> {
    let mut hits = Vec::new();
    if b != 0.0 {
        for x in [x0, x1] {
            let y = (level - a * x) / b;
            if (y0..=y1).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if a != 0.0 {
        for y in [y0, y1] {
            let x = (level - b * y) / a;
            if (x0..=x1).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    hits.dedup();
    (hits.len() >= 2).then(|| (hits[0], hits[hits.len() - 1]))
}

pub fn emit_svg(p: &Polygon, cert: Option<&WidthCertificate>, path: &Path) -> Result<()> {
    std::fs::write(path, render_svg(p, cert))?;
    Ok(())
}
