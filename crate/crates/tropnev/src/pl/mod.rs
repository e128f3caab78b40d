//! Exact algebra of continuous piecewise-linear functions on the real line.
//!
//! A [`TropicalPL`] is an immutable expression tree over a finite anchor
//! representation plus lazy generators.  Pointwise evaluation recurses over
//! the tree; breakpoint queries materialize an exact [`Window`] restriction
//! of the function on a bounded interval.  A breakpoint where the slope
//! drops (`ω < 0`) is a pole of multiplicity `τ = -ω`, one where the slope
//! rises is a root of multiplicity `τ = ω`; multiplicities are arbitrary
//! positive reals.

mod finite;
mod periodic;
mod spec;
mod window;

use std::sync::Arc;

pub use finite::FinitePl;
pub use periodic::PeriodicPl;
pub use spec::FunctionSpec;
pub use window::Window;

use crate::error::{require_finite, Error, Result};
use serde::{Deserialize, Serialize};

/// Numerical context: slope-equality tolerance and breakpoint budget.
#[derive(Clone, Copy, Debug)]
pub struct Context {
    /// Relative tolerance for slope equality and breakpoint dedup.
    pub eps: f64,
    /// Cap on the number of breakpoints a single window query may produce.
    pub budget: usize,
}

impl Default for Context {
    fn default() -> Self {
        Self {
            eps: 1e-9,
            budget: 1_000_000,
        }
    }
}

impl Context {
    pub fn with_eps(eps: f64) -> Self {
        Self {
            eps,
            ..Self::default()
        }
    }

    /// Two slopes are equal iff `|a-b| <= eps * max(1, |a|, |b|)`.
    pub fn slope_eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.eps * a.abs().max(b.abs()).max(1.0)
    }

    /// Breakpoints closer than this distance are merged.
    pub fn dedup_distance(&self, x: f64) -> f64 {
        self.eps * x.abs().max(1.0)
    }

    /// Absolute tolerance for values of the given magnitude.
    pub fn value_tol(&self, scale: f64) -> f64 {
        self.eps * scale.abs().max(1.0)
    }
}

/// Classification of a slope discontinuity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BreakpointKind {
    Pole,
    Root,
}

/// One slope discontinuity of a piecewise-linear function.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BreakpointEvent {
    pub x: f64,
    /// Function value at the breakpoint.
    pub value: f64,
    pub left_slope: f64,
    pub right_slope: f64,
    /// `ω = right_slope - left_slope`; negative at poles, positive at roots.
    pub omega: f64,
    /// Multiplicity `τ = |ω|`.
    pub tau: f64,
    pub kind: BreakpointKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigKind {
    /// Real part of the rotating cell solution.
    Cos,
    /// Imaginary part of the rotating cell solution.
    Sin,
}

#[derive(Debug)]
enum Node {
    Finite(FinitePl),
    Periodic(PeriodicPl),
    /// Tropical exponential `e_α`: slope `α^[x]` on `[m, m+1)`,
    /// solves `y(x+1) = α·y(x)`.
    Exponential {
        alpha: f64,
    },
    /// Piecewise-linear real/imaginary parts of `e^{iθ[x]}(x-[x]+1/(e^{iθ}-1))`,
    /// solving `y(x+1) + y(x-1) = 2cos(θ)·y(x)`.
    Trig {
        theta: f64,
        which: TrigKind,
    },
    Shift {
        inner: TropicalPL,
        offset: f64,
    },
    Scale {
        inner: TropicalPL,
        factor: f64,
    },
    Sum(TropicalPL, TropicalPL),
    Max(TropicalPL, TropicalPL),
}

/// A continuous piecewise-linear function `ℝ → ℝ` (tropical meromorphic
/// function).  Values are immutable and cheaply cloneable.
#[derive(Clone, Debug)]
pub struct TropicalPL {
    node: Arc<Node>,
}

impl From<Node> for TropicalPL {
    fn from(node: Node) -> Self {
        Self {
            node: Arc::new(node),
        }
    }
}

// Natural-log bound below f64 overflow, with headroom for downstream sums.
const EXP_LN_GUARD: f64 = 690.0;

fn exp_guard(alpha: f64, floor_x: f64) -> Result<()> {
    let ln_val = floor_x * alpha.abs().ln();
    if ln_val > EXP_LN_GUARD || floor_x.abs() > 1e9 {
        return Err(Error::WindowExceeded(format!(
            "exponential with base {alpha} cannot materialize near [x] = {floor_x}"
        )));
    }
    Ok(())
}

fn exp_eval(alpha: f64, x: f64) -> Result<f64> {
    let m = x.floor();
    exp_guard(alpha, m)?;
    let t = x - m;
    let p = alpha.powi(m as i32);
    if alpha.abs() > 1.0 {
        Ok(p * (t + 1.0 / (alpha - 1.0)))
    } else {
        Ok(p * (1.0 / (1.0 - alpha) - t))
    }
}

/// Value at integer `m`: `α^m/(α-1)` for `|α| > 1`, `α^m/(1-α)` for `|α| < 1`.
fn exp_integer_value(alpha: f64, m: f64) -> f64 {
    let p = alpha.powi(m as i32);
    if alpha.abs() > 1.0 {
        p / (alpha - 1.0)
    } else {
        p / (1.0 - alpha)
    }
}

fn trig_eval(theta: f64, which: TrigKind, x: f64) -> f64 {
    let k = x.floor();
    let t = x - k;
    let (sk, ck) = (theta * k).sin_cos();
    let (st, ct) = theta.sin_cos();
    let denom = 2.0 * (1.0 - ct);
    match which {
        TrigKind::Cos => ck * t + (ck * (ct - 1.0) + sk * st) / denom,
        TrigKind::Sin => sk * t + (sk * (ct - 1.0) - ck * st) / denom,
    }
}

fn integer_grid_window(
    lo: f64,
    hi: f64,
    ctx: &Context,
    value: impl Fn(f64) -> Result<f64>,
) -> Result<Window> {
    let first = lo.floor() as i64 + 1;
    let last = hi.ceil() as i64 - 1;
    let needed = (last - first + 1).max(0) as usize;
    if needed > ctx.budget {
        return Err(Error::BudgetExceeded {
            needed,
            cap: ctx.budget,
        });
    }
    let mut xs = Vec::with_capacity(needed);
    let mut ys = Vec::with_capacity(needed);
    for m in first..=last {
        let x = m as f64;
        if x > lo && x < hi {
            xs.push(x);
            ys.push(value(x)?);
        }
    }
    Ok(Window::from_parts(lo, hi, value(lo)?, value(hi)?, xs, ys))
}

impl TropicalPL {
    // ------------------------------------------------------------------
    // constructors
    // ------------------------------------------------------------------

    /// The constant function `x ↦ a`.
    pub fn constant(a: f64) -> Self {
        Node::Finite(FinitePl::new(vec![(0.0, a)], 0.0, 0.0).expect("finite constant")).into()
    }

    /// The affine function `x ↦ slope·x + intercept`.
    pub fn linear(slope: f64, intercept: f64) -> Self {
        Node::Finite(FinitePl::new(vec![(0.0, intercept)], slope, slope).expect("finite affine"))
            .into()
    }

    /// The identity `x ↦ x`.
    pub fn identity() -> Self {
        Self::linear(1.0, 0.0)
    }

    /// Piecewise-linear interpolant through `points` with linear extension
    /// by the boundary slopes.
    pub fn from_points(points: Vec<(f64, f64)>, slope_left: f64, slope_right: f64) -> Result<Self> {
        Ok(Node::Finite(FinitePl::new(points, slope_left, slope_right)?).into())
    }

    /// Periodic extension of the cell anchors given on `[0, period)`.
    pub fn periodic(period: f64, points: Vec<(f64, f64)>) -> Result<Self> {
        Ok(Node::Periodic(PeriodicPl::new(period, points)?).into())
    }

    /// The tropical exponential `e_α`, defined for `α ∉ {0, ±1}`.
    ///
    /// On `[m, m+1)` the slope is `α^m` (`-α^m` for `|α| < 1`); the function
    /// solves `y(x+1) = α·y(x)` everywhere.
    pub fn exponential(alpha: f64) -> Result<Self> {
        require_finite(alpha, "exponential base")?;
        if alpha == 0.0 || alpha == 1.0 || alpha == -1.0 {
            return Err(Error::InvalidParameters(format!(
                "exponential base must avoid 0 and ±1, got {alpha}"
            )));
        }
        Ok(Node::Exponential { alpha }.into())
    }

    /// Piecewise-linear cell solution of `y(x+1) + y(x-1) = 2cos(θ)·y(x)`
    /// for `θ ∈ (0, π)`.
    pub fn trig_solution(theta: f64, which: TrigKind) -> Result<Self> {
        require_finite(theta, "theta")?;
        if !(0.0..std::f64::consts::PI).contains(&theta) || theta == 0.0 {
            return Err(Error::InvalidParameters(format!(
                "theta must lie in (0, π), got {theta}"
            )));
        }
        Ok(Node::Trig { theta, which }.into())
    }

    // ------------------------------------------------------------------
    // combinators
    // ------------------------------------------------------------------

    /// Pointwise maximum `f ⊕ g`.
    pub fn tropical_max(&self, g: &Self) -> Self {
        Node::Max(self.clone(), g.clone()).into()
    }

    /// Pointwise sum `f ⊗ g`.
    pub fn tropical_plus(&self, g: &Self) -> Self {
        Node::Sum(self.clone(), g.clone()).into()
    }

    /// Pointwise difference `f ⊘ g`.
    pub fn tropical_minus(&self, g: &Self) -> Self {
        Node::Sum(self.clone(), g.tropical_scale(-1.0)).into()
    }

    /// Scaling `f^⊗α = α·f`.
    pub fn tropical_scale(&self, alpha: f64) -> Self {
        Node::Scale {
            inner: self.clone(),
            factor: alpha,
        }
        .into()
    }

    /// The shifted function `x ↦ f(x + c)`.
    pub fn shift(&self, c: f64) -> Self {
        if c == 0.0 {
            return self.clone();
        }
        Node::Shift {
            inner: self.clone(),
            offset: c,
        }
        .into()
    }

    /// `1∘ ⊘ f = -f`.
    pub fn negate(&self) -> Self {
        self.tropical_scale(-1.0)
    }

    /// Positive part `f⁺ = f ⊕ 0`.
    pub fn positive_part(&self) -> Self {
        self.tropical_max(&Self::constant(0.0))
    }

    // ------------------------------------------------------------------
    // queries
    // ------------------------------------------------------------------

    /// Evaluate `f(x)`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        match &*self.node {
            Node::Finite(f) => Ok(f.eval(x)),
            Node::Periodic(p) => Ok(p.eval(x)),
            Node::Exponential { alpha } => exp_eval(*alpha, x),
            Node::Trig { theta, which } => Ok(trig_eval(*theta, *which, x)),
            Node::Shift { inner, offset } => inner.eval(x + offset),
            Node::Scale { inner, factor } => Ok(factor * inner.eval(x)?),
            Node::Sum(f, g) => Ok(f.eval(x)? + g.eval(x)?),
            Node::Max(f, g) => Ok(f.eval(x)?.max(g.eval(x)?)),
        }
    }

    /// Exact restriction of the function to `[lo, hi]`.
    pub fn window(&self, lo: f64, hi: f64, ctx: &Context) -> Result<Window> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidParameters(format!(
                "window bounds must be finite with lo < hi, got [{lo}, {hi}]"
            )));
        }
        let w = self.window_inner(lo, hi, ctx)?;
        if w.xs.len() > ctx.budget {
            return Err(Error::BudgetExceeded {
                needed: w.xs.len(),
                cap: ctx.budget,
            });
        }
        Ok(w)
    }

    fn window_inner(&self, lo: f64, hi: f64, ctx: &Context) -> Result<Window> {
        match &*self.node {
            Node::Finite(f) => {
                let (xs, ys) = f.anchors_in(lo, hi);
                Ok(Window::from_parts(lo, hi, f.eval(lo), f.eval(hi), xs, ys))
            }
            Node::Periodic(p) => p.window(lo, hi, ctx),
            Node::Exponential { alpha } => {
                exp_guard(*alpha, lo.floor())?;
                exp_guard(*alpha, hi.floor() + 1.0)?;
                integer_grid_window(lo, hi, ctx, |x| {
                    if x == x.floor() {
                        Ok(exp_integer_value(*alpha, x))
                    } else {
                        exp_eval(*alpha, x)
                    }
                })
            }
            Node::Trig { theta, which } => {
                integer_grid_window(lo, hi, ctx, |x| Ok(trig_eval(*theta, *which, x)))
            }
            Node::Shift { inner, offset } => {
                let w = inner.window_inner(lo + offset, hi + offset, ctx)?;
                Ok(w.map_x(-offset))
            }
            Node::Scale { inner, factor } => {
                let w = inner.window_inner(lo, hi, ctx)?;
                Ok(w.scale_values(*factor))
            }
            Node::Sum(f, g) => {
                let wf = f.window_inner(lo, hi, ctx)?;
                let wg = g.window_inner(lo, hi, ctx)?;
                Ok(window::sum_windows(&wf, &wg, ctx))
            }
            Node::Max(f, g) => {
                let wf = f.window_inner(lo, hi, ctx)?;
                let wg = g.window_inner(lo, hi, ctx)?;
                Ok(window::max_windows(&wf, &wg, ctx))
            }
        }
    }

    /// Breakpoint events strictly inside `(lo, hi)`, sorted by position.
    pub fn breakpoints_in(&self, lo: f64, hi: f64, ctx: &Context) -> Result<Vec<BreakpointEvent>> {
        Ok(self.window(lo, hi, ctx)?.events(ctx))
    }

    /// One-sided slopes `(f'(x-), f'(x+))`.
    pub fn one_sided_slopes(&self, x: f64, ctx: &Context) -> Result<(f64, f64)> {
        require_finite(x, "slope query point")?;
        let w = self.window(x - 0.5, x + 0.5, ctx)?;
        for e in w.events(ctx) {
            if (e.x - x).abs() <= ctx.dedup_distance(x) {
                return Ok((e.left_slope, e.right_slope));
            }
        }
        // x lies in the interior of an affine cell (or on a non-event anchor):
        // take the exact chord slopes of the cells just left and right of x.
        let d = 2.0 * ctx.dedup_distance(x);
        Ok((w.cell_slope_at(x - d), w.cell_slope_at(x + d)))
    }

    /// Largest `|f|` over the window (attained at a breakpoint or an edge).
    pub fn sup_abs(&self, lo: f64, hi: f64, ctx: &Context) -> Result<f64> {
        let w = self.window(lo, hi, ctx)?;
        let mut m = w.y_lo.abs().max(w.y_hi.abs());
        for &y in &w.ys {
            m = m.max(y.abs());
        }
        Ok(m)
    }
}
