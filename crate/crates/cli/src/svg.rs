//! Bare SVG 1.1 output: polylines and a heat grid.

use std::fmt::Write;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const MARGIN: f64 = 48.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

fn open(out: &mut String, title: &str) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<title>{}</title>"#, escape(title));
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        (0.0, 1.0)
    } else if lo == hi {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

/// Line chart.  With `log` both axes are log₁₀ and non-positive points are
/// dropped.
pub fn polylines(title: &str, x_label: &str, y_label: &str, series: &[Series], log: bool) -> String {
    let map = |v: f64| if log { v.log10() } else { v };
    let keep = |&(x, y): &(f64, f64)| !log || (x > 0.0 && y > 0.0);
    let pts: Vec<Vec<(f64, f64)>> = series
        .iter()
        .map(|s| s.points.iter().filter(|p| keep(p)).map(|&(x, y)| (map(x), map(y))).collect())
        .collect();
    let (x0, x1) = bounds(pts.iter().flatten().map(|p| p.0));
    let (y0, y1) = bounds(pts.iter().flatten().map(|p| p.1));
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    open(&mut out, title);
    let (l, r, t, b) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(out, r#"<path d="M{l} {t} L{l} {b} L{r} {b}" fill="none" stroke="black"/>"#);
    let axis = |v: f64| if log { format!("1e{v:.2}") } else { format!("{v}") };
    let _ = writeln!(out, r#"<text x="{l}" y="{}" font-size="11">{}</text>"#, b + 16.0, axis(x0));
    let _ = writeln!(out, r#"<text x="{r}" y="{}" font-size="11" text-anchor="end">{}</text>"#, b + 16.0, axis(x1));
    let _ = writeln!(out, r#"<text x="{}" y="{b}" font-size="11" text-anchor="end">{}</text>"#, l - 4.0, axis(y0));
    let _ = writeln!(out, r#"<text x="{}" y="{t}" font-size="11" text-anchor="end">{}</text>"#, l - 4.0, axis(y1));
    let _ = writeln!(out, r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">{}</text>"#, WIDTH / 2.0, HEIGHT - 8.0, escape(x_label));
    let _ = writeln!(out, r#"<text x="12" y="{}" font-size="12" transform="rotate(-90 12 {})" text-anchor="middle">{}</text>"#, HEIGHT / 2.0, HEIGHT / 2.0, escape(y_label));
    for (i, (s, p)) in series.iter().zip(&pts).enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let coords: Vec<String> = p.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        let _ = writeln!(out, r#"<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{}"/>"#, coords.join(" "));
        let _ = writeln!(out, r#"<text x="{}" y="{}" font-size="11" fill="{colour}">{}</text>"#, r - 90.0, t + 14.0 * (i as f64 + 1.0), escape(&s.label));
    }
    out.push_str("</svg>\n");
    out
}

/// Grid of cells shaded by `log₁₀(1 + value)`; `x` across, `y` down.
pub fn heat_grid(title: &str, cells: &[(u32, u32, u64)]) -> String {
    let mut out = String::new();
    open(&mut out, title);
    let (x0, x1) = bounds(cells.iter().map(|c| c.0 as f64));
    let (y0, y1) = bounds(cells.iter().map(|c| c.1 as f64));
    let cw = (WIDTH - 2.0 * MARGIN) / (x1 - x0 + 1.0);
    let ch = (HEIGHT - 2.0 * MARGIN) / (y1 - y0 + 1.0);
    let top = cells.iter().map(|c| ((c.2 + 1) as f64).log10()).fold(0.0, f64::max).max(1e-9);
    for &(x, y, v) in cells {
        let shade = ((v + 1) as f64).log10() / top;
        let level = (255.0 * (1.0 - shade)).round() as u8;
        let _ = writeln!(
            out,
            r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="rgb({level},{level},255)"/>"#,
            MARGIN + (x as f64 - x0) * cw,
            MARGIN + (y as f64 - y0) * ch,
            cw,
            ch
        );
    }
    out.push_str("</svg>\n");
    out
}
