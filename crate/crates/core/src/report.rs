//! Serialization of rate experiments: CSV table, summary JSON and a log-log SVG chart.

use std::fmt::Write as _;

use serde::Serialize;

use crate::experiments::CltReport;

pub const CSV_HEADER: &str = "n,d_lev,thm1_bound,sqrt_n_dlev";

/// One header line, then one row per `n`; reals carry 17 significant digits.
pub fn to_csv(report: &CltReport) -> String {
    let mut out = String::with_capacity(64 * (report.rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in &report.rows {
        let _ = writeln!(out, "{},{:.16e},{:.16e},{:.16e}", r.n, r.d_lev, r.thm1_bound, r.sqrt_n_dlev);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub alpha: f64,
    #[serde(rename = "K")]
    pub k: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub n_min: u64,
    pub slope: Option<f64>,
    pub stderr: Option<f64>,
}

pub fn summary(report: &CltReport) -> Summary {
    let l = &report.ledger;
    Summary { alpha: l.alpha, k: l.k, c: l.c, n_min: l.n_min, slope: report.fit.slope(), stderr: report.fit.stderr() }
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 64.0;

/// Log-log line chart of `d_lev` and the bound against `n`. Zero distances
/// have no logarithm and are left out of the `d_lev` polyline.
pub fn to_svg(report: &CltReport) -> String {
    let rows = &report.rows;
    let ys = rows.iter().flat_map(|r| [r.d_lev, r.thm1_bound]).filter(|v| *v > 0.0);
    let (mut ylo, mut yhi) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !ylo.is_finite() {
        ylo = 1e-3;
        yhi = 1.0;
    }
    let (ylo, yhi) = (ylo.log10().floor(), yhi.log10().ceil().max(ylo.log10().floor() + 1.0));
    let xlo = rows.first().map_or(0.0, |r| (r.n as f64).log10());
    let xhi = rows.last().map_or(1.0, |r| (r.n as f64).log10()).max(xlo + 1e-9);

    let px = |n: u64| MARGIN + ((n as f64).log10() - xlo) / (xhi - xlo) * (WIDTH - 2.0 * MARGIN);
    let py = |v: f64| HEIGHT - MARGIN - (v.log10() - ylo) / (yhi - ylo) * (HEIGHT - 2.0 * MARGIN);
    let polyline = |pick: &dyn Fn(&crate::experiments::CltRow) -> f64| {
        rows.iter()
            .filter(|r| pick(r) > 0.0)
            .map(|r| format!("{:.2},{:.2}", px(r.n), py(pick(r))))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, x1, y0, y1) = (MARGIN, WIDTH - MARGIN, HEIGHT - MARGIN, MARGIN);
    let _ = writeln!(s, r#"<path d="M{x0},{y1} L{x0},{y0} L{x1},{y0}" stroke="black" fill="none"/>"#);
    for e in (ylo as i32)..=(yhi as i32) {
        let y = py(10f64.powi(e));
        let _ = writeln!(s, r##"<line x1="{x0}" y1="{y:.2}" x2="{x1}" y2="{y:.2}" stroke="#ddd"/>"##);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">1e{e}</text>"#, x0 - 6.0, y + 4.0);
    }
    for r in rows {
        let x = px(r.n);
        let _ = writeln!(s, r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, y0 + 18.0, r.n);
    }
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">n</text>"#, WIDTH / 2.0, HEIGHT - 12.0);
    let _ = writeln!(
        s,
        r##"<polyline points="{}" fill="none" stroke="#c0392b" stroke-width="2" stroke-dasharray="6 4"/>"##,
        polyline(&|r| r.thm1_bound)
    );
    let _ = writeln!(
        s,
        r##"<polyline points="{}" fill="none" stroke="#2c3e50" stroke-width="2"/>"##,
        polyline(&|r| r.d_lev)
    );
    let _ = writeln!(s, r##"<text x="{:.2}" y="{:.2}" fill="#2c3e50">d_lev</text>"##, x1 - 120.0, y1 + 4.0);
    let _ = writeln!(s, r##"<text x="{:.2}" y="{:.2}" fill="#c0392b">3.5(C+2)/sqrt(n)</text>"##, x1 - 120.0, y1 + 20.0);
    s.push_str("</svg>\n");
    s
}
