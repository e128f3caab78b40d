//! Dependency-free SVG line charts for functions, characteristic sweeps and
//! inequality trends.  Output is deterministic: fixed viewport, fixed
//! palette, fixed-precision coordinates.

use crate::error::Result;
use crate::pl::{Context, TropicalPL};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const MARGIN_L: f64 = 64.0;
const MARGIN_R: f64 = 16.0;
const MARGIN_T: f64 = 32.0;
const MARGIN_B: f64 = 48.0;

/// Overlay palette; solver overlays rely on the order red, green, blue.
const PALETTE: [&str; 6] = [
    "#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b",
];

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Self {
            label: label.into(),
            points,
        }
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.3}")
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let a = v.abs();
    if a >= 1e5 || a < 1e-3 {
        format!("{v:.1e}")
    } else {
        let s = format!("{v:.3}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

/// Render series as polylines with axes, ticks and a legend.  With
/// `log_y = true` the y axis shows `log10(y)` (non-positive values are
/// dropped), which keeps exponential characteristics readable.
pub fn line_chart(
    title: &str,
    x_label: &str,
    y_label: &str,
    series: &[Series],
    log_y: bool,
) -> String {
    let mapped: Vec<(String, Vec<(f64, f64)>)> = series
        .iter()
        .map(|s| {
            let pts = s
                .points
                .iter()
                .filter(|&&(_, y)| !log_y || y > 0.0)
                .map(|&(x, y)| (x, if log_y { y.log10() } else { y }))
                .filter(|&(x, y)| x.is_finite() && y.is_finite())
                .collect();
            (s.label.clone(), pts)
        })
        .collect();

    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for (_, pts) in &mapped {
        for &(x, y) in pts {
            x_min = x_min.min(x);
            x_max = x_max.max(x);
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
    }
    if !x_min.is_finite() || x_max <= x_min {
        x_min = 0.0;
        x_max = 1.0;
    }
    if !y_min.is_finite() || y_max <= y_min {
        y_min -= 0.5;
        y_max = y_min + 1.0;
    }
    let pad = 0.04 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;

    let px = |x: f64| MARGIN_L + (x - x_min) / (x_max - x_min) * (WIDTH - MARGIN_L - MARGIN_R);
    let py =
        |y: f64| HEIGHT - MARGIN_B - (y - y_min) / (y_max - y_min) * (HEIGHT - MARGIN_T - MARGIN_B);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"monospace\" font-size=\"12\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
        WIDTH / 2.0,
        xml_escape(title)
    ));

    // axes
    svg.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        fmt(MARGIN_L),
        fmt(HEIGHT - MARGIN_B),
        fmt(WIDTH - MARGIN_R),
        fmt(HEIGHT - MARGIN_B)
    ));
    svg.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        fmt(MARGIN_L),
        fmt(MARGIN_T),
        fmt(MARGIN_L),
        fmt(HEIGHT - MARGIN_B)
    ));

    // ticks
    for k in 0..=5 {
        let x = x_min + (x_max - x_min) * k as f64 / 5.0;
        svg.push_str(&format!(
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n\
             <text x=\"{0}\" y=\"{3}\" text-anchor=\"middle\">{4}</text>\n",
            fmt(px(x)),
            fmt(HEIGHT - MARGIN_B),
            fmt(HEIGHT - MARGIN_B + 5.0),
            fmt(HEIGHT - MARGIN_B + 20.0),
            tick_label(x)
        ));
        let y = y_min + (y_max - y_min) * k as f64 / 5.0;
        svg.push_str(&format!(
            "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"black\"/>\n\
             <text x=\"{3}\" y=\"{0}\" text-anchor=\"end\" dominant-baseline=\"middle\">{4}</text>\n",
            fmt(py(y)),
            fmt(MARGIN_L - 5.0),
            fmt(MARGIN_L),
            fmt(MARGIN_L - 8.0),
            tick_label(y)
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
        WIDTH / 2.0,
        HEIGHT - 8.0,
        xml_escape(x_label)
    ));
    let y_title = if log_y {
        format!("log10 {y_label}")
    } else {
        y_label.to_string()
    };
    svg.push_str(&format!(
        "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">{}</text>\n",
        HEIGHT / 2.0,
        HEIGHT / 2.0,
        xml_escape(&y_title)
    ));

    // series
    for (i, (label, pts)) in mapped.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        if pts.len() >= 2 {
            let path: Vec<String> = pts
                .iter()
                .map(|&(x, y)| format!("{},{}", fmt(px(x)), fmt(py(y))))
                .collect();
            svg.push_str(&format!(
                "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                color,
                path.join(" ")
            ));
        }
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n",
            fmt(WIDTH - MARGIN_R - 150.0),
            fmt(MARGIN_T + 16.0 * i as f64),
            color,
            xml_escape(label)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Sample a function densely enough to render every linear piece: all
/// breakpoints plus a uniform grid.
pub fn function_samples(
    f: &TropicalPL,
    lo: f64,
    hi: f64,
    ctx: &Context,
) -> Result<Vec<(f64, f64)>> {
    let mut xs: Vec<f64> = vec![lo, hi];
    for e in f.breakpoints_in(lo, hi, ctx)? {
        xs.push(e.x);
    }
    let n = 512;
    for k in 0..=n {
        xs.push(lo + (hi - lo) * k as f64 / n as f64);
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs.into_iter().map(|x| Ok((x, f.eval(x)?))).collect()
}

/// Graph of a single function on `[lo, hi]`.
pub fn plot_function(
    f: &TropicalPL,
    lo: f64,
    hi: f64,
    title: &str,
    ctx: &Context,
) -> Result<String> {
    let samples = function_samples(f, lo, hi, ctx)?;
    Ok(line_chart(
        title,
        "x",
        "f(x)",
        &[Series::new("f", samples)],
        false,
    ))
}
