//! Explicit tropical meromorphic families and closed-form solvers for the
//! first- and second-order ultra-discrete equations
//!
//! ```text
//! y(x+1) = c·y(x)             (first order)
//! y(x+1) + y(x-1) = c·y(x)    (second order)
//! ```
//!
//! Building blocks:
//!
//! * `π^(a,b)` — the 1-periodic tent with a simple root at each integer and
//!   a simple pole at `b/(a+b) mod 1`;
//! * `e_α` — the tropical exponential, slope `α^[x]` per unit cell;
//! * the trigonometric cell solutions for `|c| < 2`, obtained as real and
//!   imaginary parts of `e^{iθ[x]}(x-[x]+1/(e^{iθ}-1))` with `c = 2cos θ`.

use serde::{Deserialize, Serialize};

use crate::error::{require_finite, Error, Result};
use crate::pl::{Context, TrigKind, TropicalPL};

/// The sawtooth block `π^(a,b)`: for parameters of equal sign it is the
/// 1-periodic tent through `(0, 0)` with peak `ab/(a+b)²` at
/// `c = b/(a+b) ∈ (0, 1)`, i.e. `ω = +1` at each integer (root) and
/// `ω = -1` at `c mod 1` (pole).
pub fn make_pi(a: f64, b: f64) -> Result<TropicalPL> {
    require_finite(a, "parameter a")?;
    require_finite(b, "parameter b")?;
    let both_negative = a < 0.0 && b < 0.0;
    let both_positive = a > 0.0 && b > 0.0;
    if !(both_negative || both_positive) {
        return Err(Error::InvalidParameters(format!(
            "pi block needs parameters of equal sign (max form for negatives, \
             min form for positives), got a = {a}, b = {b}"
        )));
    }
    let c = b / (a + b);
    let peak = a * b / ((a + b) * (a + b));
    TropicalPL::periodic(1.0, vec![(0.0, 0.0), (c, peak)])
}

/// The tropical exponential `e_α`, `α ∉ {0, ±1}`; solves `y(x+1) = α·y(x)`.
pub fn make_exponential(alpha: f64) -> Result<TropicalPL> {
    TropicalPL::exponential(alpha)
}

/// Cell solution of `y(x+1) + y(x-1) = 2cos(θ)·y(x)`, `θ ∈ (0, π)`;
/// `which` selects the cosine (1) or sine (2) part.
pub fn make_trig_solution(theta: f64, which: u8) -> Result<TropicalPL> {
    let kind = match which {
        1 => TrigKind::Cos,
        2 => TrigKind::Sin,
        _ => {
            return Err(Error::InvalidParameters(format!(
                "trig solution selector must be 1 or 2, got {which}"
            )))
        }
    };
    TropicalPL::trig_solution(theta, kind)
}

/// Casoratian determinant `f(x)·g(x+1) - f(x+1)·g(x)` in ordinary
/// arithmetic.
pub fn casoratian_2x2(f: &TropicalPL, g: &TropicalPL, x: f64) -> Result<f64> {
    Ok(f.eval(x)? * g.eval(x + 1.0)? - f.eval(x + 1.0)? * g.eval(x)?)
}

// ---------------------------------------------------------------------
// periodic functions from event data
// ---------------------------------------------------------------------

/// Event data of a 1-periodic function: breakpoint positions in `[0, 1)`
/// with their slope changes `ω_k`, plus the value at 0.
///
/// A periodic function must gain as much slope as it loses over a period,
/// so the `ω_k` must sum to zero (an event at position 0 may be listed
/// explicitly or left implied by the balance).  The `period` field is
/// normalized to 1 internally; positions are fractions of the period.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PeriodicSpec {
    #[serde(default = "default_period")]
    pub period: f64,
    /// `(position in [0,1), omega)` pairs.
    pub events: Vec<(f64, f64)>,
    /// Value at 0.
    #[serde(default)]
    pub anchor: f64,
}

fn default_period() -> f64 {
    1.0
}

impl PeriodicSpec {
    pub fn new(events: Vec<(f64, f64)>, anchor: f64) -> Self {
        Self {
            period: 1.0,
            events,
            anchor,
        }
    }
}

/// Assemble the unique 1-periodic function with the prescribed events and
/// anchor as a combination of `π` blocks: for each interior event
/// `(c_k, ω_k)` take `-ω_k · π^(a_k, b_k)` with the canonical parameters
/// `a_k = c_k - 1`, `b_k = -c_k` (so that `c_k = b_k/(a_k+b_k)`), then add
/// the anchor.  The balancing event at 0 emerges from the root each block
/// carries there.
pub fn build_periodic(spec: &PeriodicSpec, ctx: &Context) -> Result<TropicalPL> {
    require_finite(spec.period, "period")?;
    if spec.period <= 0.0 {
        return Err(Error::InvalidParameters(format!(
            "period must be positive, got {}",
            spec.period
        )));
    }
    require_finite(spec.anchor, "anchor")?;
    if spec.events.is_empty() {
        return Err(Error::InvalidSpec(
            "periodic spec needs at least one event".into(),
        ));
    }
    let mut events = spec.events.clone();
    for &(x, w) in &events {
        require_finite(x, "event position")?;
        require_finite(w, "event omega")?;
        if !(0.0..1.0).contains(&x) {
            return Err(Error::InvalidSpec(format!(
                "event position {x} outside [0, 1)"
            )));
        }
        if w.abs() <= ctx.eps {
            return Err(Error::InvalidSpec(format!(
                "event omega must be nonzero, got {w} at {x}"
            )));
        }
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0));
    if events
        .windows(2)
        .any(|w| w[1].0 - w[0].0 <= ctx.dedup_distance(w[1].0))
    {
        return Err(Error::InvalidSpec(
            "event positions must be distinct".into(),
        ));
    }
    let total: f64 = events.iter().map(|e| e.1).sum();
    let scale: f64 = events.iter().map(|e| e.1.abs()).sum();
    if total.abs() > ctx.value_tol(scale) {
        return Err(Error::InvalidSpec(format!(
            "event omegas must sum to zero over a period (a periodic function \
             has as many roots as poles, with multiplicity); got {total}"
        )));
    }
    let interior: Vec<(f64, f64)> = events
        .iter()
        .copied()
        .filter(|&(x, _)| x > ctx.dedup_distance(0.0))
        .collect();
    if interior.is_empty() {
        return Err(Error::InvalidSpec(
            "periodic spec needs at least one event at positive position".into(),
        ));
    }
    let mut f = TropicalPL::constant(spec.anchor);
    for &(c, w) in &interior {
        let block = make_pi(c - 1.0, -c)?;
        f = f.tropical_plus(&block.tropical_scale(-w));
    }
    Ok(f)
}

// ---------------------------------------------------------------------
// ultra-discrete equation solvers
// ---------------------------------------------------------------------

/// Which equation a solution satisfies.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct EquationKind {
    pub order: u8,
    pub c: f64,
}

/// One term of a closed-form solution basis.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BasisTerm {
    /// Generator family: `exponential`, `exponential_reflected`, `linear`,
    /// `constant`, `periodic`, `alternating_periodic`, `trig_cos`, `trig_sin`.
    pub generator: String,
    /// Family parameter (base, slope or angle), 0 when unused.
    pub parameter: f64,
    /// Horizontal shift of the generator.
    pub shift: f64,
    pub coefficient: f64,
}

/// A solved ultra-discrete equation: the basis decomposition, the assembled
/// function, and the largest residual observed on the verification grid.
#[derive(Clone, Debug)]
pub struct UltraDiscreteSolution {
    pub equation: EquationKind,
    pub basis: Vec<BasisTerm>,
    pub assembled: TropicalPL,
    pub max_residual: f64,
    pub residual_window: (f64, f64),
}

/// Slope change of `e_c` at 0: `(c-1)/c` for `|c| > 1`, `(1-c)/c` for
/// `|c| < 1`.  The solver divides prescribed event multiplicities by this
/// to reproduce them exactly.
fn exp_omega_at_zero(c: f64) -> f64 {
    if c.abs() > 1.0 {
        (c - 1.0) / c
    } else {
        (1.0 - c) / c
    }
}

/// Solve `y(x+1) = c·y(x)` with prescribed slope discontinuities
/// `(x_j, ω_j)`, `x_j ∈ [0, 1)`, for `c ∉ {0, ±1}`.
///
/// The solution is `Σ_j ω_j/ω₀(c) · e_c(x - x_j)` with `ω₀(c)` the slope
/// change of `e_c` at 0; its breakpoint events in `[0, 1)` are exactly the
/// prescribed ones.
pub fn solve_first_order(
    c: f64,
    events: &[(f64, f64)],
    window: (f64, f64),
    ctx: &Context,
) -> Result<UltraDiscreteSolution> {
    require_finite(c, "coefficient c")?;
    if c == 0.0 {
        return Err(Error::InvalidParameters(
            "c = 0 only admits the zero right-hand side".into(),
        ));
    }
    if c == 1.0 {
        return Err(Error::InvalidParameters(
            "c = 1: solutions are the 1-periodic functions; use build_periodic".into(),
        ));
    }
    if c == -1.0 {
        return Err(Error::InvalidParameters(
            "c = -1: solutions are anti-1-periodic (u(x+1) - u(x) for 2-periodic u); \
             use build_periodic with period 2"
                .into(),
        ));
    }
    if events.is_empty() {
        return Err(Error::InvalidSpec("need at least one event".into()));
    }
    for &(x, w) in events {
        require_finite(x, "event position")?;
        require_finite(w, "event omega")?;
        if !(0.0..1.0).contains(&x) {
            return Err(Error::InvalidSpec(format!(
                "event position {x} outside [0, 1)"
            )));
        }
        if w == 0.0 {
            return Err(Error::InvalidSpec("event omega must be nonzero".into()));
        }
    }
    let rho = 1.0 / exp_omega_at_zero(c);
    let e_c = TropicalPL::exponential(c)?;
    let mut basis = Vec::new();
    let mut f: Option<TropicalPL> = None;
    for &(xj, wj) in events {
        let coeff = rho * wj;
        let term = e_c.shift(-xj).tropical_scale(coeff);
        basis.push(BasisTerm {
            generator: "exponential".into(),
            parameter: c,
            shift: xj,
            coefficient: coeff,
        });
        f = Some(match f {
            None => term,
            Some(acc) => acc.tropical_plus(&term),
        });
    }
    let assembled = f.expect("nonempty events");
    let max_residual = first_order_residual(&assembled, c, window.0, window.1, ctx)?;
    let scale = assembled.sup_abs(window.0 - 1.0, window.1 + 1.0, ctx)?;
    if max_residual > crate::report::REL_TOL * scale.max(1.0) {
        return Err(Error::NotASolution(format!(
            "assembled candidate leaves residual {max_residual}"
        )));
    }
    Ok(UltraDiscreteSolution {
        equation: EquationKind { order: 1, c },
        basis,
        assembled,
        max_residual,
        residual_window: window,
    })
}

/// Case data for the second-order equation `y(x+1) + y(x-1) = c·y(x)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum SecondOrderData {
    /// `c = 2`: `κ·x + offset` plus an optional 1-periodic part.
    LinearPlusPeriodic {
        linear_slope: f64,
        #[serde(default)]
        offset: f64,
        periodic: Option<PeriodicSpec>,
    },
    /// `c = -2`: `Σ_j (-1)^[x - x_j] Ξ_j(x - x_j)` with 1-periodic `Ξ_j`
    /// vanishing at 0 (the gluing constraint that keeps the sum continuous).
    Alternating { terms: Vec<(f64, PeriodicSpec)> },
    /// `|c| > 2`: `Σ α_j e_a(x - y_j) + Σ β_j e_a(-x + x_j)` where `a` is
    /// the root of `λ² - cλ + 1 = 0` with `|a| > 1`.
    Exponential {
        forward: Vec<(f64, f64)>,
        backward: Vec<(f64, f64)>,
    },
    /// `|c| < 2`: combination of shifts of the two trigonometric cell
    /// solutions for `θ = arccos(c/2)`.
    Trigonometric { terms: Vec<TrigTerm> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrigTerm {
    /// 1 for the cosine part, 2 for the sine part.
    pub which: u8,
    pub shift: f64,
    pub coefficient: f64,
}

pub fn solve_second_order(
    c: f64,
    data: &SecondOrderData,
    window: (f64, f64),
    ctx: &Context,
) -> Result<UltraDiscreteSolution> {
    require_finite(c, "coefficient c")?;
    let mut basis = Vec::new();
    let assembled = match data {
        SecondOrderData::LinearPlusPeriodic {
            linear_slope,
            offset,
            periodic,
        } => {
            if c != 2.0 {
                return Err(Error::InvalidParameters(format!(
                    "linear-plus-periodic data applies to c = 2 only, got c = {c}"
                )));
            }
            let mut f = TropicalPL::linear(*linear_slope, *offset);
            basis.push(BasisTerm {
                generator: "linear".into(),
                parameter: *linear_slope,
                shift: 0.0,
                coefficient: 1.0,
            });
            if *offset != 0.0 {
                basis.push(BasisTerm {
                    generator: "constant".into(),
                    parameter: *offset,
                    shift: 0.0,
                    coefficient: 1.0,
                });
            }
            if let Some(spec) = periodic {
                f = f.tropical_plus(&build_periodic(spec, ctx)?);
                basis.push(BasisTerm {
                    generator: "periodic".into(),
                    parameter: 1.0,
                    shift: 0.0,
                    coefficient: 1.0,
                });
            }
            f
        }
        SecondOrderData::Alternating { terms } => {
            if c != -2.0 {
                return Err(Error::InvalidParameters(format!(
                    "alternating data applies to c = -2 only, got c = {c}"
                )));
            }
            if terms.is_empty() {
                return Err(Error::InvalidSpec(
                    "need at least one alternating term".into(),
                ));
            }
            let mut f: Option<TropicalPL> = None;
            for (xj, spec) in terms {
                let term = alternating_term(*xj, spec, ctx)?;
                basis.push(BasisTerm {
                    generator: "alternating_periodic".into(),
                    parameter: 2.0,
                    shift: *xj,
                    coefficient: 1.0,
                });
                f = Some(match f {
                    None => term,
                    Some(acc) => acc.tropical_plus(&term),
                });
            }
            f.expect("nonempty terms")
        }
        SecondOrderData::Exponential { forward, backward } => {
            if c.abs() <= 2.0 {
                return Err(Error::InvalidParameters(format!(
                    "exponential data applies to |c| > 2 only, got c = {c}"
                )));
            }
            if forward.is_empty() && backward.is_empty() {
                return Err(Error::InvalidSpec(
                    "need at least one exponential term".into(),
                ));
            }
            let disc = (c * c - 4.0).sqrt();
            let a = if c > 0.0 {
                (c + disc) / 2.0
            } else {
                (c - disc) / 2.0
            };
            let e_a = TropicalPL::exponential(a)?;
            let e_b = TropicalPL::exponential(1.0 / a)?;
            let mut f: Option<TropicalPL> = None;
            let push = |term: TropicalPL, f: &mut Option<TropicalPL>| {
                *f = Some(match f.take() {
                    None => term,
                    Some(acc) => acc.tropical_plus(&term),
                });
            };
            for &(yj, alpha) in forward {
                push(e_a.shift(-yj).tropical_scale(alpha), &mut f);
                basis.push(BasisTerm {
                    generator: "exponential".into(),
                    parameter: a,
                    shift: yj,
                    coefficient: alpha,
                });
            }
            for &(xj, beta) in backward {
                // e_a(-x + x_j) = (1/a)·e_{1/a}(x - x_j)
                push(e_b.shift(-xj).tropical_scale(beta / a), &mut f);
                basis.push(BasisTerm {
                    generator: "exponential_reflected".into(),
                    parameter: a,
                    shift: xj,
                    coefficient: beta,
                });
            }
            f.expect("nonempty terms")
        }
        SecondOrderData::Trigonometric { terms } => {
            if c.abs() >= 2.0 {
                return Err(Error::InvalidParameters(format!(
                    "trigonometric data applies to |c| < 2 only, got c = {c}"
                )));
            }
            if terms.is_empty() {
                return Err(Error::InvalidSpec(
                    "need at least one trigonometric term".into(),
                ));
            }
            let theta = (c / 2.0).acos();
            let mut f: Option<TropicalPL> = None;
            for t in terms {
                let gen = make_trig_solution(theta, t.which)?;
                let term = gen.shift(-t.shift).tropical_scale(t.coefficient);
                basis.push(BasisTerm {
                    generator: if t.which == 1 { "trig_cos" } else { "trig_sin" }.into(),
                    parameter: theta,
                    shift: t.shift,
                    coefficient: t.coefficient,
                });
                f = Some(match f {
                    None => term,
                    Some(acc) => acc.tropical_plus(&term),
                });
            }
            f.expect("nonempty terms")
        }
    };
    let max_residual = second_order_residual(&assembled, c, window.0, window.1, ctx)?;
    let scale = assembled.sup_abs(window.0 - 1.0, window.1 + 1.0, ctx)?;
    if max_residual > crate::report::REL_TOL * scale.max(1.0) {
        return Err(Error::NotASolution(format!(
            "assembled candidate leaves residual {max_residual}"
        )));
    }
    Ok(UltraDiscreteSolution {
        equation: EquationKind { order: 2, c },
        basis,
        assembled,
        max_residual,
        residual_window: window,
    })
}

/// `(-1)^[x - x_j] · Ξ(x - x_j)` as a 2-periodic extension; requires
/// `Ξ(0) = 0`, otherwise the alternating continuation would be
/// discontinuous at the gluing points `x_j + ℤ`.
fn alternating_term(xj: f64, spec: &PeriodicSpec, ctx: &Context) -> Result<TropicalPL> {
    let xi = build_periodic(spec, ctx)?;
    let xi0 = xi.eval(0.0)?;
    let scale = xi.sup_abs(0.0, 1.0, ctx)?;
    if xi0.abs() > ctx.value_tol(scale) {
        return Err(Error::InvalidSpec(format!(
            "alternating cell must vanish at 0 to glue continuously, got {xi0}"
        )));
    }
    // cell on [0, 2): Ξ(t) then -Ξ(t)
    let w = xi.window(-ctx.eps, 1.0 + ctx.eps, ctx)?;
    let mut points: Vec<(f64, f64)> = vec![(0.0, 0.0)];
    for (&x, &y) in w.xs.iter().zip(&w.ys) {
        if x > ctx.dedup_distance(x) && x < 1.0 - ctx.dedup_distance(x) {
            points.push((x, y));
        }
    }
    points.push((1.0, 0.0));
    let mirrored: Vec<(f64, f64)> = points
        .iter()
        .skip(1) // (1, 0) is already the sign flip point
        .filter(|&&(x, _)| x < 1.0)
        .map(|&(x, y)| (x + 1.0, -y))
        .collect();
    points.extend(mirrored);
    let alt = TropicalPL::periodic(2.0, points)?;
    Ok(alt.shift(-xj))
}

/// The 3-periodic solution of `y(x+1) + y(x-1) = -y(x)` assembled from the
/// tent `Δ` of height 1/6 on `[0, 1/3]`: `-Δ` bumps on `[0,1/3]` and
/// `[2/3,1]`, `+Δ` bumps on `[1,4/3]` and `[8/3,3)`, zero elsewhere.
pub fn three_periodic_fixture() -> TropicalPL {
    let s = 1.0 / 6.0;
    TropicalPL::periodic(
        3.0,
        vec![
            (0.0, 0.0),
            (1.0 / 6.0, -s),
            (1.0 / 3.0, 0.0),
            (2.0 / 3.0, 0.0),
            (5.0 / 6.0, -s),
            (1.0, 0.0),
            (7.0 / 6.0, s),
            (4.0 / 3.0, 0.0),
            (8.0 / 3.0, 0.0),
            (17.0 / 6.0, s),
        ],
    )
    .expect("static fixture is valid")
}

/// Equation JSON consumed by the solver front ends:
/// `{"order":1,"c":...,"events":[[x,omega],...]}` or
/// `{"order":2,"c":...,"mode":{"case":...,...}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EquationSpec {
    pub order: u8,
    pub c: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub events: Option<Vec<(f64, f64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<SecondOrderData>,
}

impl EquationSpec {
    pub fn solve(&self, window: (f64, f64), ctx: &Context) -> Result<UltraDiscreteSolution> {
        match self.order {
            1 => {
                let events = self.events.as_ref().ok_or_else(|| {
                    Error::InvalidSpec("first-order equations need `events`".into())
                })?;
                solve_first_order(self.c, events, window, ctx)
            }
            2 => {
                let mode = self.mode.as_ref().ok_or_else(|| {
                    Error::InvalidSpec("second-order equations need `mode`".into())
                })?;
                solve_second_order(self.c, mode, window, ctx)
            }
            other => Err(Error::InvalidSpec(format!(
                "order must be 1 or 2, got {other}"
            ))),
        }
    }
}

// ---------------------------------------------------------------------
// residuals
// ---------------------------------------------------------------------

/// Verification grid: all breakpoints of `f` reachable by the equation's
/// shifts, mapped into `[lo, hi]`, plus a uniform grid and the endpoints.
fn residual_grid(f: &TropicalPL, lo: f64, hi: f64, reach: f64, ctx: &Context) -> Result<Vec<f64>> {
    let mut xs = vec![lo, hi];
    let uniform = 1000usize;
    for k in 0..=uniform {
        xs.push(lo + (hi - lo) * k as f64 / uniform as f64);
    }
    for e in f.breakpoints_in(lo - reach, hi + reach, ctx)? {
        for shift in [-reach, 0.0, reach] {
            let x = e.x + shift;
            if x >= lo && x <= hi {
                xs.push(x);
            }
        }
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    Ok(xs)
}

/// `max |f(x+1) - c·f(x)|` over the verification grid on `[lo, hi]`.
pub fn first_order_residual(
    f: &TropicalPL,
    c: f64,
    lo: f64,
    hi: f64,
    ctx: &Context,
) -> Result<f64> {
    let mut worst = 0.0_f64;
    for x in residual_grid(f, lo, hi, 1.0, ctx)? {
        let r = f.eval(x + 1.0)? - c * f.eval(x)?;
        worst = worst.max(r.abs());
    }
    Ok(worst)
}

/// `max |f(x+1) + f(x-1) - c·f(x)|` over the verification grid on `[lo, hi]`.
pub fn second_order_residual(
    f: &TropicalPL,
    c: f64,
    lo: f64,
    hi: f64,
    ctx: &Context,
) -> Result<f64> {
    let mut worst = 0.0_f64;
    for x in residual_grid(f, lo, hi, 1.0, ctx)? {
        let r = f.eval(x + 1.0)? + f.eval(x - 1.0)? - c * f.eval(x)?;
        worst = worst.max(r.abs());
    }
    Ok(worst)
}



#[cfg(test)]
mod thread_safety {
    use super::*;

    #[test]
    fn functions_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<TropicalPL>();
        assert_send_sync::<UltraDiscreteSolution>();
        let e = TropicalPL::exponential(2.0).unwrap();
        let handles: Vec<_> = (0..4)
            .map(|k| {
                let f = e.clone();
                std::thread::spawn(move || f.eval(k as f64).unwrap())
            })
            .collect();
        for (k, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), 2.0f64.powi(k as i32));
        }
    }
}
