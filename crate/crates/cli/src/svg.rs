use std::fmt::Write;

use inscribed::{CurveModel, Rectangle};
use num_complex::Complex64;

const CURVE_SAMPLES: usize = 512;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Color used for family `k`.
pub fn family_color(k: u32) -> &'static str {
    PALETTE[(k.saturating_sub(1) as usize) % PALETTE.len()]
}

// SVG y grows downward; flip so the plot reads like the plane.
fn coord(p: Complex64) -> (f64, f64) {
    (p.re, -p.im)
}

/// The curve as one closed path and each rectangle as a 4-point polygon,
/// in a viewBox spanning the curve bounds plus a 10% margin.
pub fn render(model: &CurveModel, rects: &[Rectangle]) -> String {
    let pts: Vec<(f64, f64)> = model.sample(CURVE_SAMPLES).into_iter().map(coord).collect();
    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &pts {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let margin = 0.1 * (max_x - min_x).max(max_y - min_y);
    let (vx, vy) = (min_x - margin, min_y - margin);
    let (vw, vh) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let stroke = 0.004 * vw.max(vh);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}">"#
    );
    let mut path = String::new();
    for (i, (x, y)) in pts.iter().enumerate() {
        let _ = write!(path, "{}{x:.6} {y:.6} ", if i == 0 { "M" } else { "L" });
    }
    path.push('Z');
    let _ = writeln!(
        out,
        r#"  <path d="{path}" fill="none" stroke="black" stroke-width="{stroke:.6}"/>"#
    );
    for r in rects {
        let points: Vec<String> = r
            .vertices
            .iter()
            .map(|&v| {
                let (x, y) = coord(v);
                format!("{x:.6},{y:.6}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"  <polygon points="{}" fill="none" stroke="{}" stroke-width="{stroke:.6}"/>"#,
            points.join(" "),
            family_color(r.family.k)
        );
    }
    out.push_str("</svg>\n");
    out
}
