//! Browser bindings for the interactive demo page.
//!
//! Three operations, all string-in / string-out so the page needs no
//! framework: plot a function spec, sweep its characteristic, and solve an
//! ultra-discrete equation with an overlay plot.  Build with
//! `wasm-pack build --target web` and open `www/index.html`.

use wasm_bindgen::prelude::*;

use tropnev::nevanlinna;
use tropnev::plot::{self, Series};
use tropnev::special::{self, EquationSpec};
use tropnev::{Context, TropicalPL};

fn ctx() -> Context {
    Context::default()
}

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// SVG graph of a function spec together with a breakpoint table (JSON:
/// `{svg, events: [{x, value, omega, tau, kind}]}`).
#[wasm_bindgen]
pub fn explore_function(spec_json: &str, x_min: f64, x_max: f64) -> Result<String, JsValue> {
    let ctx = ctx();
    if !(x_min < x_max) {
        return Err(err("x_min must be below x_max"));
    }
    let f = TropicalPL::from_json(spec_json).map_err(err)?;
    let svg = plot::plot_function(&f, x_min, x_max, "function", &ctx).map_err(err)?;
    let events = f.breakpoints_in(x_min, x_max, &ctx).map_err(err)?;
    serde_json::to_string(&serde_json::json!({ "svg": svg, "events": events })).map_err(err)
}

/// Characteristic sweep: returns `{svg, csv, order, hyper_order}`.
#[wasm_bindgen]
pub fn sweep_characteristic(
    spec_json: &str,
    r_min: f64,
    r_max: f64,
    points: usize,
    log_y: bool,
) -> Result<String, JsValue> {
    let ctx = ctx();
    let f = TropicalPL::from_json(spec_json).map_err(err)?;
    let samples = nevanlinna::sweep(&f, r_min, r_max, points, true, &ctx).map_err(err)?;
    let series = vec![
        Series::new("T(r)", samples.iter().map(|s| (s.r, s.t)).collect()),
        Series::new("m(r)", samples.iter().map(|s| (s.r, s.m)).collect()),
        Series::new("N(r)", samples.iter().map(|s| (s.r, s.big_n)).collect()),
    ];
    let svg = plot::line_chart("characteristic sweep", "r", "value", &series, log_y);
    let mut csv = String::from("r,m,n,N,T\n");
    for s in &samples {
        csv.push_str(&format!(
            "{:?},{:?},{:?},{:?},{:?}\n",
            s.r, s.m, s.n, s.big_n, s.t
        ));
    }
    let growth = nevanlinna::estimate_growth(&f, r_min, r_max, points.max(8), &ctx).map_err(err)?;
    serde_json::to_string(&serde_json::json!({
        "svg": svg,
        "csv": csv,
        "order": growth.order,
        "hyper_order": growth.hyper_order,
        "infinite_order": growth.infinite_order,
    }))
    .map_err(err)
}

/// Solve an equation spec on the window; returns
/// `{svg, solution: {...}, max_residual}`.
#[wasm_bindgen]
pub fn solve_equation(
    equation_json: &str,
    window_lo: f64,
    window_hi: f64,
) -> Result<String, JsValue> {
    let ctx = ctx();
    if !(window_lo < window_hi) {
        return Err(err("window_lo must be below window_hi"));
    }
    let spec: EquationSpec = serde_json::from_str(equation_json).map_err(err)?;
    let solution = spec.solve((window_lo, window_hi), &ctx).map_err(err)?;
    let lo = window_lo.max(-8.0);
    let hi = window_hi.min(8.0);
    let mut series = Vec::new();
    if solution.equation.order == 2 && solution.equation.c.abs() < 2.0 {
        let theta = (solution.equation.c / 2.0).acos();
        for (which, label) in [(1u8, "cell cos"), (2u8, "cell sin")] {
            let g = special::make_trig_solution(theta, which).map_err(err)?;
            series.push(Series::new(
                label,
                plot::function_samples(&g, lo, hi, &ctx).map_err(err)?,
            ));
        }
    }
    series.push(Series::new(
        "solution",
        plot::function_samples(&solution.assembled, lo, hi, &ctx).map_err(err)?,
    ));
    let svg = plot::line_chart("solution overlay", "x", "y", &series, false);
    serde_json::to_string(&serde_json::json!({
        "svg": svg,
        "equation": solution.equation,
        "basis": solution.basis,
        "max_residual": solution.max_residual,
        "function": solution.assembled.to_spec(),
    }))
    .map_err(err)
}
