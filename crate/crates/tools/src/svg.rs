//! Static log-log chart of measured ops vs n, one polyline per method.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::bench::{BenchRow, Method};
use crate::{Result, ToolError};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 160.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 60.0;

fn colour(method: Method) -> &'static str {
    match method {
        Method::Combinatorial => "#1f77b4",
        Method::Triangle => "#d62728",
    }
}

// log10, with zero counts pinned to 1 so they stay on the chart
fn lg(x: f64) -> f64 {
    x.max(1.0).log10()
}

pub fn emit_svg_plot(rows: &[BenchRow]) -> Result<Vec<u8>> {
    if rows.is_empty() {
        return Err(ToolError::EmptyPlot);
    }
    let mut series: BTreeMap<Method, Vec<(f64, f64)>> = BTreeMap::new();
    for r in rows {
        series
            .entry(r.method)
            .or_default()
            .push((lg(r.n as f64), lg(r.measured_ops as f64)));
    }
    for pts in series.values_mut() {
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    }

    let all = series.values().flatten();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in all {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let (x0, x1) = (x0.floor(), x1.ceil().max(x0.floor() + 1.0));
    let (y0, y1) = (y0.floor(), y1.ceil().max(y0.floor() + 1.0));

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |x: f64| MARGIN_LEFT + (x - x0) / (x1 - x0) * plot_w;
    let py = |y: f64| MARGIN_TOP + plot_h - (y - y0) / (y1 - y0) * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (left, right, top, bottom) = (px(x0), px(x1), py(y1), py(y0));
    let _ = writeln!(
        s,
        r#"<path d="M{left:.1},{top:.1} V{bottom:.1} H{right:.1}" fill="none" stroke="black"/>"#
    );

    for d in x0 as i32..=x1 as i32 {
        let x = px(d as f64);
        let _ = writeln!(
            s,
            r#"<line x1="{x:.1}" y1="{bottom:.1}" x2="{x:.1}" y2="{:.1}" stroke="black"/><text x="{x:.1}" y="{:.1}" text-anchor="middle">1e{d}</text>"#,
            bottom + 5.0,
            bottom + 20.0
        );
    }
    for d in y0 as i32..=y1 as i32 {
        let y = py(d as f64);
        let _ = writeln!(
            s,
            r#"<line x1="{:.1}" y1="{y:.1}" x2="{left:.1}" y2="{y:.1}" stroke="black"/><text x="{:.1}" y="{:.1}" text-anchor="end">1e{d}</text>"#,
            left - 5.0,
            left - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">n (variables)</text>"#,
        (left + right) / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.1}" text-anchor="middle" transform="rotate(-90 20 {:.1})">operations</text>"#,
        (top + bottom) / 2.0,
        (top + bottom) / 2.0
    );

    for (k, (method, pts)) in series.iter().enumerate() {
        let points = pts
            .iter()
            .map(|&(x, y)| format!("{:.1},{:.1}", px(x), py(y)))
            .collect::<Vec<_>>()
            .join(" ");
        let c = colour(*method);
        let _ = writeln!(
            s,
            r#"<polyline class="{method}" points="{points}" fill="none" stroke="{c}" stroke-width="2"/>"#
        );
        let ly = top + 20.0 * k as f64 + 10.0;
        let _ = writeln!(
            s,
            r#"<line x1="{:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{c}" stroke-width="2"/><text x="{:.1}" y="{:.1}">{method}</text>"#,
            right + 15.0,
            right + 40.0,
            right + 45.0,
            ly + 4.0
        );
    }
    s.push_str("</svg>\n");
    Ok(s.into_bytes())
}
