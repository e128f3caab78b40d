//! Nevanlinna functionals over the max-plus semiring.
//!
//! For a tropical meromorphic `f` and radius `r > 0`:
//!
//! * proximity `m(r,f) = (f⁺(r) + f⁺(-r)) / 2`,
//! * pole count `n(t,f) = Σ τ_f(b)` over poles `b` with `|b| < t`,
//! * integrated count `N(r,f) = ½ ∫₀ʳ n(t,f) dt = ½ Σ τ_f(b)(r - |b|)`,
//! * characteristic `T(r,f) = m(r,f) + N(r,f)`.
//!
//! `T` and `N` are continuous, non-decreasing, piecewise linear in `r`.
//! Poles on the boundary `|b| = r` are excluded (strict inequality), which
//! matches the closed-form sum and keeps `N` continuous.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pl::{BreakpointKind, Context, TropicalPL};
use crate::report::VerificationReport;
use crate::semiring::pos;

/// The functionals of one function at one radius.  `t = m + big_n` exactly
/// as computed.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct NevanlinnaSample {
    pub r: f64,
    /// Proximity `m(r,f)`.
    pub m: f64,
    /// Multiplicity-weighted pole count `n(r,f)` on `(-r, r)`.
    pub n: f64,
    /// Integrated counting function `N(r,f)`.
    #[serde(rename = "N")]
    pub big_n: f64,
    /// Characteristic `T(r,f)`.
    #[serde(rename = "T")]
    pub t: f64,
}

/// Proximity function `m(r,f) = ½(f⁺(r) + f⁺(-r))`.
pub fn proximity(f: &TropicalPL, r: f64) -> Result<f64> {
    Ok(0.5 * (pos(f.eval(r)?) + pos(f.eval(-r)?)))
}

/// Multiplicity-weighted number of poles in the open interval `(-t, t)`.
pub fn count_poles(f: &TropicalPL, t: f64, ctx: &Context) -> Result<f64> {
    if t <= 0.0 {
        return Ok(0.0);
    }
    let events = f.breakpoints_in(-t, t, ctx)?;
    let total: f64 = events
        .iter()
        .filter(|e| e.kind == BreakpointKind::Pole)
        .map(|e| e.tau)
        .sum();
    // an empty Sum<f64> is -0.0; keep counts positively signed
    Ok(total + 0.0)
}

/// Counting function `N(r,f) = ½ Σ_{|b| < r} τ_f(b)(r - |b|)`.
pub fn counting(f: &TropicalPL, r: f64, ctx: &Context) -> Result<f64> {
    if r <= 0.0 {
        return Ok(0.0);
    }
    let events = f.breakpoints_in(-r, r, ctx)?;
    let total: f64 = events
        .iter()
        .filter(|e| e.kind == BreakpointKind::Pole)
        .map(|e| e.tau * (r - e.x.abs()))
        .sum();
    Ok(0.5 * total + 0.0)
}

/// Characteristic `T(r,f) = m(r,f) + N(r,f)` with its components.
pub fn characteristic(f: &TropicalPL, r: f64, ctx: &Context) -> Result<NevanlinnaSample> {
    if r <= 0.0 {
        return Err(Error::InvalidParameters(format!(
            "radius must be positive, got {r}"
        )));
    }
    let m = proximity(f, r)?;
    let n = count_poles(f, r, ctx)?;
    let big_n = counting(f, r, ctx)?;
    Ok(NevanlinnaSample {
        r,
        m,
        n,
        big_n,
        t: m + big_n,
    })
}

/// Shorthand for `T(r,f)`.
pub fn t_of(f: &TropicalPL, r: f64, ctx: &Context) -> Result<f64> {
    Ok(characteristic(f, r, ctx)?.t)
}

/// Sweep the functionals over a radius grid.
pub fn sweep(
    f: &TropicalPL,
    r_min: f64,
    r_max: f64,
    points: usize,
    geometric: bool,
    ctx: &Context,
) -> Result<Vec<NevanlinnaSample>> {
    Ok(radius_grid(r_min, r_max, points, geometric)?
        .into_iter()
        .map(|r| characteristic(f, r, ctx))
        .collect::<Result<Vec<_>>>()?)
}

pub fn radius_grid(r_min: f64, r_max: f64, points: usize, geometric: bool) -> Result<Vec<f64>> {
    if !(r_min > 0.0 && r_max > r_min) || points < 2 {
        return Err(Error::InvalidParameters(format!(
            "need 0 < r_min < r_max and at least 2 points, got [{r_min}, {r_max}] x {points}"
        )));
    }
    let n = points as f64 - 1.0;
    Ok((0..points)
        .map(|k| {
            let s = k as f64 / n;
            if geometric {
                r_min * (r_max / r_min).powf(s)
            } else {
                r_min + (r_max - r_min) * s
            }
        })
        .collect())
}

/// Infimum of `f` over its poles in `(lo, hi)`; `+∞` when there are none
/// (the function is "tropical entire" on the window).
pub fn pole_floor(f: &TropicalPL, lo: f64, hi: f64, ctx: &Context) -> Result<f64> {
    floor_over(f, lo, hi, ctx, BreakpointKind::Pole)
}

/// Infimum of `f` over its roots in `(lo, hi)`; `+∞` when there are none.
pub fn root_floor(f: &TropicalPL, lo: f64, hi: f64, ctx: &Context) -> Result<f64> {
    floor_over(f, lo, hi, ctx, BreakpointKind::Root)
}

fn floor_over(
    f: &TropicalPL,
    lo: f64,
    hi: f64,
    ctx: &Context,
    kind: BreakpointKind,
) -> Result<f64> {
    Ok(f.breakpoints_in(lo, hi, ctx)?
        .iter()
        .filter(|e| e.kind == kind)
        .map(|e| e.value)
        .fold(f64::INFINITY, f64::min))
}

/// Jensen's identity `T(r,f) - T(r,-f) = f(0)`.
pub fn verify_jensen(f: &TropicalPL, r: f64, ctx: &Context) -> Result<VerificationReport> {
    let t_f = t_of(f, r, ctx)?;
    let t_neg = t_of(&f.negate(), r, ctx)?;
    let f0 = f.eval(0.0)?;
    let mut report = VerificationReport::equality(
        "jensen",
        vec![r],
        vec![t_f - t_neg],
        vec![f0],
        "T(r,f) - T(r,-f) = f(0)",
    );
    // verdict tolerance scales with T(r,f), not with f(0)
    report.pass = (t_f - t_neg - f0).abs() <= crate::report::REL_TOL * t_f.abs().max(1.0);
    Ok(report)
}

/// The Poisson–Jensen interpolation identity: for `x ∈ (-r, r)`,
///
/// ```text
/// f(x) = ½(f(r)+f(-r)) + x/(2r)·(f(r)-f(-r))
///        - 1/(2r) Σ_roots τ(a)(r² - |a-x|r - a·x)
///        + 1/(2r) Σ_poles τ(b)(r² - |b-x|r - b·x)
/// ```
pub fn verify_poisson_jensen(
    f: &TropicalPL,
    r: f64,
    x: f64,
    ctx: &Context,
) -> Result<VerificationReport> {
    if !(x > -r && x < r) {
        return Err(Error::PreconditionViolated(format!(
            "evaluation point {x} must lie inside (-{r}, {r})"
        )));
    }
    let fr = f.eval(r)?;
    let fmr = f.eval(-r)?;
    let mut rhs = 0.5 * (fr + fmr) + x / (2.0 * r) * (fr - fmr);
    for e in f.breakpoints_in(-r, r, ctx)? {
        let contrib = e.tau * (r * r - (e.x - x).abs() * r - e.x * x) / (2.0 * r);
        match e.kind {
            BreakpointKind::Root => rhs -= contrib,
            BreakpointKind::Pole => rhs += contrib,
        }
    }
    let lhs = f.eval(x)?;
    Ok(VerificationReport::equality(
        "poisson_jensen",
        vec![r],
        vec![lhs],
        vec![rhs],
        format!("interpolation identity at x = {x}"),
    ))
}

/// First-main-theorem bound and (under `a < L_f`) the two-sided band:
///
/// * always: `T(r, -max(f,a)) <= T(r,f) + max(a,0) - max(f(0),a)`;
/// * if `a < L_f` on the window: `0 <= ε(r,a) <= max(a,0)` where
///   `ε(r,a) = T(r,-max(f,a)) - T(r,f) + max(f(0),a)`.
pub fn verify_first_main(
    f: &TropicalPL,
    a: f64,
    r: f64,
    ctx: &Context,
) -> Result<VerificationReport> {
    let clipped = f.tropical_max(&TropicalPL::constant(a)).negate();
    let t_clip = t_of(&clipped, r, ctx)?;
    let t_f = t_of(f, r, ctx)?;
    let f0 = f.eval(0.0)?;
    let bound = t_f + pos(a) - f0.max(a);

    let l_f = pole_floor(f, -r, r, ctx)?;
    let mut radii = vec![r];
    let mut lhs = vec![t_clip];
    let mut rhs = vec![bound];
    let mut notes = String::from("T(r,-max(f,a)) <= T(r,f) + max(a,0) - max(f(0),a)");
    if a < l_f {
        // band: 0 <= eps <= max(a,0), reported as two inequalities
        let eps = t_clip - t_f + f0.max(a);
        radii.extend([r, r]);
        lhs.extend([0.0, eps]);
        rhs.extend([eps, pos(a)]);
        notes.push_str("; a < L_f so 0 <= eps(r,a) <= max(a,0)");
    }
    Ok(VerificationReport::inequality(
        "first_main",
        radii,
        lhs,
        rhs,
        notes,
    ))
}

/// Estimated growth order and hyper-order from a radius sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthEstimate {
    /// `max` over the tail of `log T(r) / log r` (limsup proxy).
    pub order: f64,
    /// Set when the hyper-order estimate exceeds
    /// [`INFINITE_ORDER_HYPER_THRESHOLD`], marking `order` as unreliable
    /// because `T` grows faster than any power of `r`.
    pub infinite_order: bool,
    /// `max` over the tail of `log log T(r) / log r`; `None` when `T <= 1`
    /// over the whole grid (the iterated logarithm is undefined there).
    pub hyper_order: Option<f64>,
    pub grid: Vec<f64>,
    pub tail_fraction: f64,
}

/// Above this hyper-order estimate the order is flagged infinite.  Desk-scale
/// sweeps of polynomially growing functions report hyper-order estimates up
/// to ~0.55 (the iterated logarithm decays slowly), exponentially growing
/// ones report ~0.9 and above.
pub const INFINITE_ORDER_HYPER_THRESHOLD: f64 = 0.7;

/// Default fraction of the radius grid (largest radii) used as limsup proxy.
pub const DEFAULT_TAIL_FRACTION: f64 = 0.5;

pub fn estimate_growth(
    f: &TropicalPL,
    r_min: f64,
    r_max: f64,
    points: usize,
    ctx: &Context,
) -> Result<GrowthEstimate> {
    estimate_growth_with_tail(f, r_min, r_max, points, DEFAULT_TAIL_FRACTION, ctx)
}

pub fn estimate_growth_with_tail(
    f: &TropicalPL,
    r_min: f64,
    r_max: f64,
    points: usize,
    tail_fraction: f64,
    ctx: &Context,
) -> Result<GrowthEstimate> {
    if points < 8 {
        return Err(Error::InvalidParameters(format!(
            "growth estimation needs at least 8 grid points, got {points}"
        )));
    }
    if !(0.0 < tail_fraction && tail_fraction <= 1.0) {
        return Err(Error::InvalidParameters(format!(
            "tail fraction must lie in (0, 1], got {tail_fraction}"
        )));
    }
    let grid = radius_grid(r_min, r_max, points, true)?;
    let ts = grid
        .iter()
        .map(|&r| t_of(f, r, ctx))
        .collect::<Result<Vec<_>>>()?;
    let tail_start = ((points as f64) * (1.0 - tail_fraction)).floor() as usize;

    let mut order = 0.0_f64;
    let mut hyper: Option<f64> = None;
    for k in tail_start..points {
        let (r, t) = (grid[k], ts[k]);
        if t > 0.0 {
            order = order.max(t.ln() / r.ln());
        }
        if t > 1.0 {
            let h = t.ln().ln() / r.ln();
            hyper = Some(hyper.map_or(h, |old: f64| old.max(h)));
        }
    }
    let infinite_order = hyper.is_some_and(|h| h > INFINITE_ORDER_HYPER_THRESHOLD);
    Ok(GrowthEstimate {
        order: order.max(0.0),
        infinite_order,
        hyper_order: hyper.map(|h| h.max(0.0)),
        grid,
        tail_fraction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::special;
    use rand::Rng;

    fn ctx() -> Context {
        Context::default()
    }

    fn tent() -> TropicalPL {
        TropicalPL::from_points(vec![(0.0, 0.0)], 1.0, -1.0).unwrap()
    }

    #[test]
    fn proximity_of_affine() {
        // m(r, αx+β) = β below β/α, (α/2)r + β/2 after
        let (a, b) = (1.5, 3.0);
        let f = TropicalPL::linear(a, b);
        assert_eq!(proximity(&f, 1.0).unwrap(), b);
        assert_eq!(proximity(&f, 4.0).unwrap(), a / 2.0 * 4.0 + b / 2.0);
        assert_eq!(proximity(&tent(), 7.3).unwrap(), 0.0);
    }

    #[test]
    fn proximity_of_exponential_closed_form() {
        // m(r, e_α) = (α^m(ε + 1/(α-1)) + α^(-m-1)(1-ε+1/(α-1)))/2, r = m+ε
        let alpha = 2.0;
        let e = TropicalPL::exponential(alpha).unwrap();
        for (m, eps) in [(3i32, 0.25), (5, 0.0), (8, 0.9)] {
            let r = m as f64 + eps;
            let expect = (alpha.powi(m) * (eps + 1.0 / (alpha - 1.0))
                + alpha.powi(-m - 1) * (1.0 - eps + 1.0 / (alpha - 1.0)))
                / 2.0;
            let got = proximity(&e, r).unwrap();
            assert!((got - expect).abs() <= 1e-12 * expect.abs());
        }
    }

    #[test]
    fn pole_count_examples() {
        let c = ctx();
        assert_eq!(count_poles(&tent(), 1.0, &c).unwrap(), 2.0);

        // n(t, -π^(a,b)) = 2[t] + 1 (poles at the integers, multiplicity 1)
        let neg_pi = special::make_pi(-1.0, -1.0).unwrap().negate();
        for t in [0.5f64, 1.5, 4.7, 9.2] {
            let expect = 2.0 * t.floor() + 1.0;
            assert_eq!(count_poles(&neg_pi, t, &c).unwrap(), expect);
        }

        // zeros of e_α (α < -1) at even integers: n(t, 1∘⊘e_α) follows the
        // geometric closed form (1-1/α){α²/(α²-1)·α^2ℓ + α^(-2ℓ)/(1-α²)}
        let alpha: f64 = -2.0;
        let e = TropicalPL::exponential(alpha).unwrap();
        for (ell, t) in [(1i32, 2.5), (2, 4.5), (3, 7.9)] {
            let a2 = alpha * alpha;
            let expect =
                (1.0 - 1.0 / alpha) * (a2 / (a2 - 1.0) * a2.powi(ell) + a2.powi(-ell) / (1.0 - a2));
            let got = count_poles(&e.negate(), t, &c).unwrap();
            assert!(
                (got - expect).abs() <= 1e-9 * expect.abs(),
                "t = {t}: got {got}, expected {expect}"
            );
        }
    }

    #[test]
    fn counting_examples() {
        let c = ctx();
        assert_eq!(counting(&tent(), 3.0, &c).unwrap(), 3.0);

        // N(r, -π^(a,b)) = ∫₀ʳ [t] dt + r/2
        let neg_pi = special::make_pi(-1.0, -2.0).unwrap().negate();
        for r in [2.5f64, 4.5, 10.0] {
            let k = r.floor();
            let integral = k * (k - 1.0) / 2.0 + k * (r - k);
            let expect = integral + r / 2.0;
            let got = counting(&neg_pi, r, &c).unwrap();
            assert!((got - expect).abs() <= 1e-9 * expect.max(1.0), "r = {r}");
        }
        // large r: N(r)/(r²/2) → 1
        let got = counting(&neg_pi, 400.0, &c).unwrap();
        assert!((got / (400.0 * 400.0 / 2.0) - 1.0).abs() < 0.05);
    }

    /// Independent oracle: integrate `n(t, f)` by the midpoint rule on
    /// panels aligned with every pole radius, which integrates the step
    /// function exactly.  A uniform 10⁴-panel trapezoid cannot align with
    /// the jumps, so panels are refined with the jump radii instead.
    fn quadrature_counting(f: &TropicalPL, r: f64, ctx: &Context) -> f64 {
        let mut cuts: Vec<f64> = (0..=10_000).map(|k| r * k as f64 / 10_000.0).collect();
        for e in f.breakpoints_in(-r, r, ctx).unwrap() {
            if e.kind == BreakpointKind::Pole {
                cuts.push(e.x.abs());
            }
        }
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let mut integral = 0.0;
        for w in cuts.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            integral += count_poles(f, mid, ctx).unwrap() * (w[1] - w[0]);
        }
        0.5 * integral
    }

    #[test]
    fn counting_matches_quadrature_oracle() {
        let c = ctx();
        let mut rng = generate::rng(31);
        for _ in 0..12 {
            let f = generate::random_finite_pl(&mut rng);
            let r = rng.random_range(3.0..12.0);
            let exact = counting(&f, r, &c).unwrap();
            let quad = quadrature_counting(&f, r, &c);
            assert!(
                (exact - quad).abs() <= 1e-6 * exact.abs().max(1.0),
                "closed form {exact} vs quadrature {quad}"
            );
        }
    }

    #[test]
    fn characteristic_assembles_and_linear_growth() {
        let c = ctx();
        // T(r, cx) = |c|r/2
        for slope in [2.0, -0.7, 4.9] {
            let f = TropicalPL::linear(slope, 0.0);
            for r in [0.5, 1.0, 7.3] {
                let s = characteristic(&f, r, &c).unwrap();
                assert!((s.t - slope.abs() * r / 2.0).abs() < 1e-12);
                assert_eq!(s.t, s.m + s.big_n);
            }
        }
        // e_2 is entire: T = m
        let e2 = TropicalPL::exponential(2.0).unwrap();
        let s = characteristic(&e2, 6.0, &c).unwrap();
        assert_eq!(s.big_n, 0.0);
        assert_eq!(s.t, s.m);
    }

    #[test]
    fn t_and_n_nondecreasing_in_radius() {
        let c = ctx();
        let mut rng = generate::rng(7);
        for _ in 0..20 {
            let f = generate::random_function(&mut rng);
            let mut prev_t = 0.0f64;
            let mut prev_n = 0.0f64;
            for k in 1..=40 {
                let r = 0.3 * k as f64;
                let s = characteristic(&f, r, &c).unwrap();
                assert!(s.t >= prev_t - 1e-9 * prev_t.abs().max(1.0));
                assert!(s.big_n >= prev_n - 1e-9 * prev_n.abs().max(1.0));
                prev_t = s.t;
                prev_n = s.big_n;
            }
        }
    }

    #[test]
    fn pole_count_bounded_by_counting_growth() {
        // n(r,f) <= 2/((k-1)r) · N(kr,f)
        let c = ctx();
        let mut rng = generate::rng(11);
        for _ in 0..15 {
            let f = generate::random_function(&mut rng);
            for r in [1.0, 2.5, 6.0] {
                let n = count_poles(&f, r, &c).unwrap();
                for k in [1.5, 2.0, 4.0] {
                    let bound = 2.0 / ((k - 1.0) * r) * counting(&f, k * r, &c).unwrap();
                    assert!(n <= bound + 1e-9 * bound.max(1.0));
                }
            }
        }
    }

    #[test]
    fn jensen_examples() {
        let c = ctx();
        let rep = verify_jensen(&tent(), 3.0, &c).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs[0], 0.0); // T(r,f) - T(r,-f) for the even tent
        assert_eq!(rep.rhs[0], 0.0);

        let e = TropicalPL::exponential(-0.5).unwrap();
        assert!(verify_jensen(&e, 7.3, &c).unwrap().pass);

        let mut rng = generate::rng(5);
        for _ in 0..60 {
            let f = generate::random_function(&mut rng);
            let r = rng.random_range(0.5..12.0);
            let rep = verify_jensen(&f, r, &c).unwrap();
            assert!(rep.pass, "Jensen failed: {:?}", rep);
        }
    }

    #[test]
    fn poisson_jensen_examples() {
        let c = ctx();
        // affine: reduces to linear interpolation through (±r, f(±r))
        let f = TropicalPL::linear(2.0, -1.0);
        assert!(verify_poisson_jensen(&f, 5.0, 1.25, &c).unwrap().pass);

        let pi = special::make_pi(-1.0, -2.0).unwrap();
        assert!(verify_poisson_jensen(&pi, 4.7, 1.3, &c).unwrap().pass);

        let mut rng = generate::rng(17);
        for _ in 0..60 {
            let f = generate::random_function(&mut rng);
            let r = rng.random_range(1.0..10.0);
            let x = rng.random_range(-0.9..0.9) * r;
            let rep = verify_poisson_jensen(&f, r, x, &c).unwrap();
            assert!(rep.pass, "PJ failed: {:?}", rep);
        }
    }

    #[test]
    fn first_main_bound_and_band() {
        let c = ctx();
        let mut rng = generate::rng(23);
        for _ in 0..50 {
            let f = generate::random_function(&mut rng);
            let r = rng.random_range(1.0..10.0);
            let floor = pole_floor(&f, -r, r, &c).unwrap();
            // generic target for the plain bound
            let rep = verify_first_main(&f, rng.random_range(-6.0..6.0), r, &c).unwrap();
            assert!(rep.pass, "FMT bound failed: {rep:?}");
            // target below the pole floor: the band applies
            let low = if floor.is_finite() { floor } else { 5.0 } - rng.random_range(0.1..4.0);
            let rep = verify_first_main(&f, low, r, &c).unwrap();
            assert!(rep.pass, "FMT band failed: {rep:?}");
            assert!(rep.lhs.len() == 3);
        }
    }

    #[test]
    fn proximity_scaling_and_subadditivity() {
        let c = ctx();
        let mut rng = generate::rng(29);
        for _ in 0..40 {
            let f = generate::random_finite_pl(&mut rng);
            let g = generate::random_finite_pl(&mut rng);
            let r = rng.random_range(0.5..10.0);
            let alpha = rng.random_range(0.0..4.0);
            let mf = proximity(&f, r).unwrap();
            let scaled = proximity(&f.tropical_scale(alpha), r).unwrap();
            assert!((scaled - alpha * mf).abs() <= 1e-9 * scaled.abs().max(1.0));

            let mg = proximity(&g, r).unwrap();
            let sum = f.tropical_plus(&g);
            assert!(proximity(&sum, r).unwrap() <= mf + mg + 1e-9 * (mf + mg).max(1.0));
            let big = |h: &TropicalPL| counting(h, r, &c).unwrap();
            assert!(big(&sum) <= big(&f) + big(&g) + 1e-9);
            let t = |h: &TropicalPL| t_of(h, r, &c).unwrap();
            let bound = t(&f) + t(&g);
            assert!(t(&sum) <= bound + 1e-9 * bound.max(1.0));

            // monotone m: f <= f ⊕ g pointwise
            let m_up = proximity(&f.tropical_max(&g), r).unwrap();
            assert!(m_up + 1e-12 >= mf.max(mg));
        }
    }

    #[test]
    fn counting_not_monotone_under_pointwise_order() {
        // f <= g pointwise yet N(r,f) > N(r,g): double peak under single peak
        let c = ctx();
        let g =
            TropicalPL::from_points(vec![(-1.0, -1.0), (0.0, 0.0), (1.0, -1.0)], 0.0, 0.0).unwrap();
        let f = TropicalPL::from_points(
            vec![
                (-1.0, -1.0),
                (-0.5, -0.5),
                (0.0, -1.0),
                (0.5, -0.5),
                (1.0, -1.0),
            ],
            0.0,
            0.0,
        )
        .unwrap();
        for k in 0..=400 {
            let x = -10.0 + 20.0 * k as f64 / 400.0;
            assert!(f.eval(x).unwrap() <= g.eval(x).unwrap() + 1e-12);
        }
        let r = 3.0;
        let nf = counting(&f, r, &c).unwrap();
        let ng = counting(&g, r, &c).unwrap();
        assert!(nf > ng, "N(r,f) = {nf} should exceed N(r,g) = {ng}");
    }

    #[test]
    fn pole_and_root_floors() {
        let c = ctx();
        // entire function: no poles anywhere
        let e2 = TropicalPL::exponential(2.0).unwrap();
        assert_eq!(pole_floor(&e2, -20.0, 20.0, &c).unwrap(), f64::INFINITY);
        assert_eq!(pole_floor(&tent(), -5.0, 5.0, &c).unwrap(), 0.0);
        assert_eq!(root_floor(&tent().negate(), -5.0, 5.0, &c).unwrap(), 0.0);

        // e_{-1/2}: poles at even integers, values (2/3)·2^(-m)ish
        let e = TropicalPL::exponential(-0.5).unwrap();
        let expect = e.eval(8.0).unwrap().min(e.eval(-8.0).unwrap());
        assert!((pole_floor(&e, -9.0, 9.0, &c).unwrap() - expect).abs() < 1e-12);
        let root_expect = e.eval(-7.0).unwrap();
        assert!((root_floor(&e, -9.0, 9.0, &c).unwrap() - root_expect).abs() < 1e-12);

        // π roots sit at the integers with value 0
        let pi = special::make_pi(-1.0, -1.0).unwrap();
        assert!((root_floor(&pi, -3.5, 3.5, &c).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn growth_estimates() {
        let c = ctx();
        // periodic: order two
        let neg_pi = special::make_pi(-1.0, -1.0).unwrap().negate();
        let est = estimate_growth(&neg_pi, 10.0, 400.0, 24, &c).unwrap();
        assert!(
            (1.85..=2.15).contains(&est.order),
            "order estimate {}",
            est.order
        );
        assert!(!est.infinite_order);

        // exponential: hyper-order one, flagged infinite order
        let e2 = TropicalPL::exponential(2.0).unwrap();
        let est = estimate_growth(&e2, 5.0, 60.0, 24, &c).unwrap();
        let h = est.hyper_order.unwrap();
        assert!((0.9..=1.1).contains(&h), "hyper-order estimate {h}");
        assert!(est.infinite_order);

        // affine: order one
        let f = TropicalPL::linear(2.0, 1.0);
        let est = estimate_growth(&f, 10.0, 400.0, 24, &c).unwrap();
        assert!(
            (est.order - 1.0).abs() < 0.15,
            "order estimate {}",
            est.order
        );
        assert!(!est.infinite_order);

        // degenerate: T == 0 on the whole grid
        let neg = TropicalPL::constant(-5.0);
        let est = estimate_growth(&neg, 1.0, 100.0, 16, &c).unwrap();
        assert_eq!(est.order, 0.0);
        assert!(est.hyper_order.is_none());
    }
}
