//! Finite-radius verifiers for the theorem-level inequalities of tropical
//! value distribution: the shift-quotient proximity bound, the second main
//! theorem, the characteristic sandwich and the scalar lemmas behind them.
//! Every check here is exact at all radii (no asymptotics, no exceptional
//! sets); verdicts use the relative tolerance of [`crate::report`].

use crate::error::{require_finite, Error, Result};
use crate::nevanlinna::{counting, pole_floor, proximity, t_of};
use crate::pl::{Context, TropicalPL};
use crate::report::VerificationReport;
use crate::semiring::pos;

/// Shift-quotient proximity bound: for `α > 1` and all `r > 0`,
///
/// ```text
/// m(r, f(x+c) ⊘ f(x)) <= 12|c|/(α-1)/(r+|c|) · { T(α(r+|c|), f) - f(0)/2 }
/// ```
///
/// The `-f(0)/2` term is the Jensen-exact form: the bound follows from the
/// Poisson–Jensen representation at radius `ρ = (α+1)(r+|c|)/2` together
/// with `T(A,f) + T(A,-f) = 2T(A,f) - f(0)`.
pub fn verify_shift_quotient_bound(
    f: &TropicalPL,
    c: f64,
    alpha: f64,
    r: f64,
    ctx: &Context,
) -> Result<VerificationReport> {
    if alpha <= 1.0 {
        return Err(Error::PreconditionViolated(format!(
            "alpha must exceed 1, got {alpha}"
        )));
    }
    if r <= 0.0 {
        return Err(Error::PreconditionViolated(format!(
            "radius must be positive, got {r}"
        )));
    }
    let lhs = proximity(&f.shift(c).tropical_minus(f), r)?;
    let big_radius = alpha * (r + c.abs());
    let t_big = t_of(f, big_radius, ctx)?;
    let f0 = f.eval(0.0)?;
    let rhs = 12.0 * c.abs() / (alpha - 1.0) / (r + c.abs()) * (t_big - f0 / 2.0);
    Ok(VerificationReport::inequality(
        "shift_quotient_bound",
        vec![r],
        vec![lhs],
        vec![rhs],
        format!("c = {c}, alpha = {alpha}"),
    ))
}

/// Tropical counterpart of the multiple-value counting function:
/// `N₁(r,f) = N(r, 1∘⊘f(x+c)) + 2N(r,f) - N(r, f(x+c))`.  May be negative;
/// reported as computed.
pub fn n1_counting(f: &TropicalPL, c: f64, r: f64, ctx: &Context) -> Result<f64> {
    let fc = f.shift(c);
    Ok(counting(&fc.negate(), r, ctx)? + 2.0 * counting(f, r, ctx)? - counting(&fc, r, ctx)?)
}

/// Scalar product-vs-sum inequality: with `b_k = -(p-1)a_k`,
///
/// ```text
/// 1∘ ⊘ ⊗_k(x ⊕ a_k)  <=  ⊗_k (b_k ⊘ (x ⊕ a_k))
/// ```
///
/// equivalently `Σ_k max(x, a_k) >= min_k (max(x, a_k) + (p-1)·a_k)`.
pub fn check_prod_sum_inequality(targets: &[f64], x: f64) -> bool {
    if targets.is_empty() {
        return true;
    }
    let p = targets.len() as f64;
    let lhs: f64 = targets.iter().map(|&a| x.max(a)).sum();
    let rhs = targets
        .iter()
        .map(|&a| x.max(a) + (p - 1.0) * a)
        .fold(f64::INFINITY, f64::min);
    lhs >= rhs - 1e-12 * lhs.abs().max(rhs.abs()).max(1.0)
}

/// Scalar max identity:
/// `max{ Σ_k max(v, a_k), p·max_k a_k } = p·max(v, max_k a_k)`.
pub fn check_max_identity(value: f64, targets: &[f64]) -> bool {
    if targets.is_empty() {
        return true;
    }
    let p = targets.len() as f64;
    let a_max = targets.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lhs = targets
        .iter()
        .map(|&a| value.max(a))
        .sum::<f64>()
        .max(p * a_max);
    let rhs = p * value.max(a_max);
    (lhs - rhs).abs() <= 1e-12 * lhs.abs().max(rhs.abs()).max(1.0)
}

/// The product `⊗_k (f ⊕ a_k)` as a function.
fn clipped_product(f: &TropicalPL, targets: &[f64]) -> TropicalPL {
    let mut acc: Option<TropicalPL> = None;
    for &a in targets {
        let part = f.tropical_max(&TropicalPL::constant(a));
        acc = Some(match acc {
            None => part,
            Some(x) => x.tropical_plus(&part),
        });
    }
    acc.expect("nonempty targets")
}

/// Characteristic sandwich for `F = ⊗_k (f ⊕ a_k)`:
///
/// * upper (always): `T(r,F) <= p·T(r,f) + Σ_k max(a_k,0)`;
/// * lower (needs `max a_k < L_f`): `T(r,F) >= p·T(r,f) - p·max_k max(a_k,0)`;
/// * sharpened: if additionally all `a_k <= 0`, then `T(r,F) = p·T(r,f)`.
pub fn verify_characteristic_sandwich(
    f: &TropicalPL,
    targets: &[f64],
    r: f64,
    ctx: &Context,
) -> Result<VerificationReport> {
    if targets.is_empty() {
        return Err(Error::PreconditionViolated(
            "need at least one target".into(),
        ));
    }
    let p = targets.len() as f64;
    let l_f = pole_floor(f, -r, r, ctx)?;
    let a_max = targets.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if a_max >= l_f {
        return Err(Error::PreconditionViolated(format!(
            "lower bound requires max(a_k) = {a_max} < L_f = {l_f}"
        )));
    }
    let t_prod = t_of(&clipped_product(f, targets), r, ctx)?;
    let t_f = t_of(f, r, ctx)?;
    let pos_sum: f64 = targets.iter().map(|&a| pos(a)).sum();
    let pos_max = targets.iter().map(|&a| pos(a)).fold(0.0_f64, f64::max);

    let mut radii = vec![r, r];
    let mut lhs = vec![t_prod, p * t_f - p * pos_max];
    let mut rhs = vec![p * t_f + pos_sum, t_prod];
    let mut notes = String::from("upper and lower characteristic bounds");
    if targets.iter().all(|&a| a <= 0.0) {
        radii.push(r);
        lhs.push((t_prod - p * t_f).abs());
        rhs.push(crate::report::REL_TOL * t_prod.abs().max(1.0));
        notes.push_str("; all a_k <= 0 so T(r,F) = p·T(r,f) exactly");
    }
    Ok(VerificationReport::inequality(
        "characteristic_sandwich",
        radii,
        lhs,
        rhs,
        notes,
    ))
}

/// The three exact inequalities chained in the proof of the second main
/// theorem, checked independently.  With `F = ⊗_k (f ⊕ a_k)` and
/// `fc = f(x+c)`:
///
/// 1. `m(r,1∘⊘F) <= T(r,fc) - N(r,1∘⊘fc) + m(r, fc⊘F) - f(c)`
/// 2. `m(r, fc⊘F) <= m(r, ⊕_k fc⊘(f⊕a_k)) + (p-1)·max_k max(-a_k,0)`
/// 3. `N(r,1∘⊘F) <= Σ_k N(r, 1∘⊘(f⊕a_k))`
///
/// The additive constant in (2) is driven by the most negative target:
/// pointwise, `-Σ_k max(f,a_k) <= max_k[-max(f,a_k)] + (p-1)·max_k(-a_k)`
/// by the scalar product-vs-sum inequality, and lifting a constant `K`
/// through the proximity function costs `max(K, 0)`.  A constant built
/// from `max(a_k, 0)` instead fails for negative targets (take `f` a
/// large negative constant).
pub fn verify_lemma_chain(
    f: &TropicalPL,
    c: f64,
    targets: &[f64],
    r: f64,
    ctx: &Context,
) -> Result<Vec<VerificationReport>> {
    if targets.is_empty() {
        return Err(Error::PreconditionViolated(
            "need at least one target".into(),
        ));
    }
    let p = targets.len() as f64;
    let product = clipped_product(f, targets);
    let fc = f.shift(c);

    let neg_max = targets.iter().map(|&a| pos(-a)).fold(0.0_f64, f64::max);
    let m_inv_prod = proximity(&product.negate(), r)?;
    let chain1_rhs = t_of(&fc, r, ctx)? - counting(&fc.negate(), r, ctx)?
        + proximity(&fc.tropical_minus(&product), r)?
        - f.eval(c)?;
    let chain1 = VerificationReport::inequality(
        "inverted_product_proximity",
        vec![r],
        vec![m_inv_prod],
        vec![chain1_rhs],
        "m(r,1∘⊘F) <= T(r,fc) - N(r,1∘⊘fc) + m(r,fc⊘F) - f(c)",
    );

    let mut best: Option<TropicalPL> = None;
    for &a in targets {
        let quot = fc.tropical_minus(&f.tropical_max(&TropicalPL::constant(a)));
        best = Some(match best {
            None => quot,
            Some(b) => b.tropical_max(&quot),
        });
    }
    let spread = best.expect("nonempty targets");
    let chain2 = VerificationReport::inequality(
        "shift_over_product_proximity",
        vec![r],
        vec![proximity(&fc.tropical_minus(&product), r)?],
        vec![proximity(&spread, r)? + (p - 1.0) * neg_max],
        "m(r,fc⊘F) <= m(r,⊕_k fc⊘(f⊕a_k)) + (p-1)·max max(-a_k,0)",
    );

    let mut n_sum = 0.0;
    for &a in targets {
        n_sum += counting(&f.tropical_max(&TropicalPL::constant(a)).negate(), r, ctx)?;
    }
    let chain3 = VerificationReport::inequality(
        "product_counting_subadditive",
        vec![r],
        vec![counting(&product.negate(), r, ctx)?],
        vec![n_sum],
        "N(r,1∘⊘F) <= Σ_k N(r,1∘⊘(f⊕a_k))",
    );

    Ok(vec![chain1, chain2, chain3])
}

/// One second-main-theorem instance: the function, the shift `c > 0`, the
/// distinct targets `a_j` and the largest radius the instance is valid for.
/// The hypothesis `max(a_j) < L_f` is checked on the padded window
/// `[-R-|c|, R+|c|]`, which contains every pole any term consults.
#[derive(Clone, Debug)]
pub struct SmtInstance {
    pub f: TropicalPL,
    pub c: f64,
    pub targets: Vec<f64>,
    pub radius_cap: f64,
}

impl SmtInstance {
    pub fn new(f: TropicalPL, c: f64, targets: Vec<f64>, radius_cap: f64) -> Result<Self> {
        require_finite(c, "shift c")?;
        require_finite(radius_cap, "radius cap")?;
        if c <= 0.0 {
            return Err(Error::PreconditionViolated(format!(
                "shift must be positive, got {c}"
            )));
        }
        if radius_cap <= 0.0 {
            return Err(Error::PreconditionViolated(
                "radius cap must be positive".into(),
            ));
        }
        if targets.is_empty() {
            return Err(Error::PreconditionViolated(
                "need at least one target".into(),
            ));
        }
        for &a in &targets {
            require_finite(a, "target")?;
        }
        let mut sorted = targets.clone();
        sorted.sort_by(f64::total_cmp);
        if sorted.windows(2).any(|w| w[1] - w[0] <= 0.0) {
            return Err(Error::PreconditionViolated(
                "targets must be distinct".into(),
            ));
        }
        Ok(Self {
            f,
            c,
            targets,
            radius_cap,
        })
    }

    /// `L_f` on the padded window; the instance hypothesis is
    /// `max(a_j) < L_f`.
    pub fn pole_floor(&self, ctx: &Context) -> Result<f64> {
        let pad = self.radius_cap + self.c.abs();
        pole_floor(&self.f, -pad, pad, ctx)
    }

    pub fn check_hypothesis(&self, ctx: &Context) -> Result<()> {
        let l_f = self.pole_floor(ctx)?;
        let a_max = self
            .targets
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        if a_max >= l_f {
            return Err(Error::PreconditionViolated(format!(
                "max(a_j) = {a_max} must stay below L_f = {l_f}"
            )));
        }
        Ok(())
    }
}

/// The second main theorem, exact at every radius `0 < r <= R`:
///
/// ```text
/// q·T(r,f) <= Σ_j N(r, 1∘⊘(f⊕a_j)) + T(r, f(x+c)) - N(r, 1∘⊘f(x+c))
///             + m(r, f(x+c)⊘f(x)) - f(c)
///             + (q-1)·max_j max(-a_j, 0) + q·max_j max(a_j, 0)
///             + Σ_j max(f(0), a_j)
/// ```
///
/// The two additive constants come from the proximity chain (which pays
/// `(q-1)·max_j(-a_j)⁺` for splitting the clipped product) and from the
/// characteristic lower bound (which pays `q·max_j(a_j)⁺`).  For targets
/// that are all non-negative the first constant vanishes and the bound
/// agrees with the classical `(2q-1)·max_j(a_j)⁺` display, which by
/// itself fails for negative targets.
pub fn verify_second_main(inst: &SmtInstance, r: f64, ctx: &Context) -> Result<VerificationReport> {
    if r <= 0.0 || r > inst.radius_cap {
        return Err(Error::PreconditionViolated(format!(
            "radius {r} outside (0, {}]",
            inst.radius_cap
        )));
    }
    inst.check_hypothesis(ctx)?;
    let f = &inst.f;
    let q = inst.targets.len() as f64;
    let fc = f.shift(inst.c);
    let f0 = f.eval(0.0)?;

    let lhs = q * t_of(f, r, ctx)?;
    let mut rhs = t_of(&fc, r, ctx)? - counting(&fc.negate(), r, ctx)?
        + proximity(&fc.tropical_minus(f), r)?
        - f.eval(inst.c)?;
    let mut pos_max = 0.0_f64;
    let mut neg_max = 0.0_f64;
    for &a in &inst.targets {
        rhs += counting(&f.tropical_max(&TropicalPL::constant(a)).negate(), r, ctx)?;
        rhs += f0.max(a);
        pos_max = pos_max.max(pos(a));
        neg_max = neg_max.max(pos(-a));
    }
    rhs += (q - 1.0) * neg_max + q * pos_max;
    Ok(VerificationReport::inequality(
        "second_main",
        vec![r],
        vec![lhs],
        vec![rhs],
        format!("q = {}, c = {}", inst.targets.len(), inst.c),
    ))
}

/// Rearranged second-main display in proximity form (exact at every radius):
///
/// ```text
/// Σ_k m(r, 1∘⊘(f⊕a_k)) <= m(r, 1∘⊘f(x+c))
///                          + m(r, ⊕_k f(x+c)⊘(f(x)⊕a_k))
///                          + (q-1)·max_k max(-a_k,0) + q·max_k max(a_k,0)
///                          + Σ_k max(a_k,0)
/// ```
///
/// Derived from the second main theorem by Jensen's identity applied to
/// the shifted function, with the same corrected constants.
pub fn verify_smt_proximity_form(
    inst: &SmtInstance,
    r: f64,
    ctx: &Context,
) -> Result<VerificationReport> {
    if r <= 0.0 || r > inst.radius_cap {
        return Err(Error::PreconditionViolated(format!(
            "radius {r} outside (0, {}]",
            inst.radius_cap
        )));
    }
    inst.check_hypothesis(ctx)?;
    let f = &inst.f;
    let q = inst.targets.len() as f64;
    let fc = f.shift(inst.c);

    let mut lhs = 0.0;
    let mut spread: Option<TropicalPL> = None;
    let mut pos_sum = 0.0;
    let mut pos_max = 0.0_f64;
    let mut neg_max = 0.0_f64;
    for &a in &inst.targets {
        let clipped = f.tropical_max(&TropicalPL::constant(a));
        lhs += proximity(&clipped.negate(), r)?;
        let quot = fc.tropical_minus(&clipped);
        spread = Some(match spread {
            None => quot,
            Some(s) => s.tropical_max(&quot),
        });
        pos_sum += pos(a);
        pos_max = pos_max.max(pos(a));
        neg_max = neg_max.max(pos(-a));
    }
    let rhs = proximity(&fc.negate(), r)?
        + proximity(&spread.expect("targets nonempty"), r)?
        + (q - 1.0) * neg_max
        + q * pos_max
        + pos_sum;
    Ok(VerificationReport::inequality(
        "second_main_proximity_form",
        vec![r],
        vec![lhs],
        vec![rhs],
        format!("q = {}, c = {}", inst.targets.len(), inst.c),
    ))
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
    fn shift_quotient_bound_examples() {
        let c = ctx();
        // affine functions: lhs is the constant c·slope clipped at zero
        let f = TropicalPL::linear(2.0, 1.0);
        let rep = verify_shift_quotient_bound(&f, 0.7, 2.0, 5.0, &c).unwrap();
        assert!(rep.pass);
        assert!((rep.lhs[0] - 1.4).abs() < 1e-12);

        // e_2 with c = 1: the quotient IS e_2 again, so lhs = m(r, e_2) = T(r, e_2)
        let e2 = TropicalPL::exponential(2.0).unwrap();
        let rep = verify_shift_quotient_bound(&e2, 1.0, 2.0, 5.0, &c).unwrap();
        assert!(rep.pass);
        let t5 = crate::nevanlinna::t_of(&e2, 5.0, &c).unwrap();
        assert!((rep.lhs[0] - t5).abs() <= 1e-9 * t5);

        // periodic function, many radii
        let neg_pi = special::make_pi(-1.0, -1.0).unwrap().negate();
        let mut rng = generate::rng(83);
        for _ in 0..20 {
            let r = rng.random_range(0.5..20.0);
            let rep = verify_shift_quotient_bound(&neg_pi, 0.3, 1.5, r, &c).unwrap();
            assert!(rep.pass, "{rep:?}");
        }
    }

    #[test]
    fn shift_quotient_identity_for_exponentials() {
        // m(r, e_α(x+1) ⊘ e_α(x)) = (α-1)·T(r, e_α) for α > 1
        let c = ctx();
        for alpha in [2.0, 3.0] {
            let e = TropicalPL::exponential(alpha).unwrap();
            let quot = e.shift(1.0).tropical_minus(&e);
            for k in 1..=20 {
                let r = 0.7 * k as f64;
                let lhs = proximity(&quot, r).unwrap();
                let rhs = (alpha - 1.0) * t_of(&e, r, &c).unwrap();
                assert!(
                    (lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0),
                    "alpha = {alpha}, r = {r}"
                );
            }
        }
    }

    #[test]
    fn shift_quotient_bound_randomized() {
        let c = ctx();
        let mut rng = generate::rng(101);
        for i in 0..300 {
            let f = generate::random_function(&mut rng);
            let shift = rng.random_range(-2.0..2.0);
            let alpha = rng.random_range(1.05..4.0);
            let r = rng.random_range(0.3..12.0);
            let rep = verify_shift_quotient_bound(&f, shift, alpha, r, &c).unwrap();
            assert!(rep.pass, "instance {i}: {rep:?}");
        }
    }

    #[test]
    fn n1_counting_examples() {
        let c = ctx();
        assert_eq!(
            n1_counting(&TropicalPL::linear(2.0, 0.5), 1.0, 5.0, &c).unwrap(),
            0.0
        );
        // tent with c = 1, r = 5: 1∘⊘f(x+1) = |x+1| has no poles,
        // 2N(r, f) = 2r, N(r, f(x+1)) = (r-1): N₁ = 0 + 2r - (r-1)
        let got = n1_counting(&tent(), 1.0, 5.0, &c).unwrap();
        assert!((got - 6.0).abs() < 1e-12);

        // cross-check against term-by-term counting for a wilder function
        let e = TropicalPL::exponential(-2.0).unwrap();
        let (cc, r) = (2.0, 9.0);
        let direct = n1_counting(&e, cc, r, &c).unwrap();
        let fc = e.shift(cc);
        let by_terms = crate::nevanlinna::counting(&fc.negate(), r, &c).unwrap()
            + 2.0 * crate::nevanlinna::counting(&e, r, &c).unwrap()
            - crate::nevanlinna::counting(&fc, r, &c).unwrap();
        assert!((direct - by_terms).abs() <= 1e-9 * by_terms.abs().max(1.0));
    }

    #[test]
    fn prod_sum_inequality_cases() {
        // p = 1: equality
        assert!(check_prod_sum_inequality(&[2.5], -1.0));
        // x below all targets: Σ a_k >= p·a_min
        assert!(check_prod_sum_inequality(&[1.0, 2.0, 3.0], 0.0));
        let mut rng = generate::rng(5);
        for _ in 0..100_000 {
            let p = rng.random_range(1..=6usize);
            let targets: Vec<f64> = (0..p).map(|_| rng.random_range(-10.0..10.0)).collect();
            let x = rng.random_range(-12.0..12.0);
            assert!(check_prod_sum_inequality(&targets, x), "{targets:?}, {x}");
        }
    }

    #[test]
    fn max_identity_cases() {
        assert!(check_max_identity(-5.0, &[1.0, 2.0])); // below all
        assert!(check_max_identity(7.0, &[1.0, 2.0])); // above all
        let mut rng = generate::rng(7);
        for _ in 0..100_000 {
            let p = rng.random_range(1..=6usize);
            let targets: Vec<f64> = (0..p).map(|_| rng.random_range(-10.0..10.0)).collect();
            let v = rng.random_range(-12.0..12.0);
            assert!(check_max_identity(v, &targets), "{targets:?}, {v}");
        }
    }

    #[test]
    fn sandwich_bounds_and_sharpened_equality() {
        let c = ctx();
        let mut rng = generate::rng(11);
        for _ in 0..50 {
            let f = generate::random_function(&mut rng);
            let r = rng.random_range(1.0..10.0);
            let floor = crate::nevanlinna::pole_floor(&f, -r, r, &c).unwrap();
            let base = if floor.is_finite() { floor } else { 4.0 };
            let p = rng.random_range(1..=3usize);
            // nonpositive targets below the pole floor: sharpened equality
            let targets: Vec<f64> = (0..p)
                .map(|k| (base.min(0.0) - 0.2 - k as f64) - rng.random_range(0.0..1.0))
                .collect();
            let rep = verify_characteristic_sandwich(&f, &targets, r, &c).unwrap();
            assert!(rep.pass, "{rep:?}");
            assert_eq!(rep.lhs.len(), 3, "sharpened row present");
        }
        // p = 1, a = 0 collapses to first-main-style bounds (if 0 < L_f)
        let f = tent().tropical_plus(&TropicalPL::constant(2.0));
        let rep = verify_characteristic_sandwich(&f, &[0.0], 4.0, &c).unwrap();
        assert!(rep.pass);
        // hypothesis violation: target at/above the pole floor
        assert!(matches!(
            verify_characteristic_sandwich(&tent(), &[1.0], 4.0, &c),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn lemma_chain_on_examples() {
        let c = ctx();
        // affine: all counting terms vanish
        let f = TropicalPL::linear(1.5, 0.25);
        for rep in verify_lemma_chain(&f, 0.8, &[0.0], 6.0, &c).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
        // alternating exponential
        let e = TropicalPL::exponential(-2.0).unwrap();
        for rep in verify_lemma_chain(&e, 1.0, &[-3.0, -5.0], 8.0, &c).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
        // shifted periodic with three targets
        let f = special::make_pi(-1.0, -2.0)
            .unwrap()
            .negate()
            .tropical_plus(&TropicalPL::constant(3.0));
        for rep in verify_lemma_chain(&f, 0.5, &[-1.0, 0.5, 2.0], 12.0, &c).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
        // randomized
        let mut rng = generate::rng(13);
        for _ in 0..100 {
            let f = generate::random_function(&mut rng);
            let shift = rng.random_range(0.1..2.0);
            let p = rng.random_range(1..=4usize);
            let targets: Vec<f64> = (0..p).map(|_| rng.random_range(-6.0..6.0)).collect();
            let r = rng.random_range(0.5..10.0);
            for rep in verify_lemma_chain(&f, shift, &targets, r, &c).unwrap() {
                assert!(rep.pass, "{rep:?}");
            }
        }
    }

    #[test]
    fn second_main_on_affine_fixture() {
        let c = ctx();
        // f(x) = x + 1, q = 1, a₁ = 0: for r > max(1, c+1) the exact terms are
        // lhs = (r+1)/2 and rhs = r + c/2 (the N(r,1∘⊘(f⊕0)) term contributes
        // (r-1)/2, T(r,f(x+c)) gives (r+c+1)/2, m-term c, -f(c) and Σmax(f0,a)
        // give -(c+1) + 1)
        let f = TropicalPL::linear(1.0, 1.0);
        for shift in [0.5, 1.0, 2.0] {
            let inst = SmtInstance::new(f.clone(), shift, vec![0.0], 50.0).unwrap();
            for r in [5.0, 10.0, 50.0] {
                let rep = verify_second_main(&inst, r, &c).unwrap();
                assert!(rep.pass);
                assert!((rep.lhs[0] - (r + 1.0) / 2.0).abs() < 1e-12);
                assert!(
                    (rep.rhs[0] - (r + shift / 2.0)).abs() < 1e-12,
                    "r = {r}, c = {shift}: rhs = {}",
                    rep.rhs[0]
                );
                // the weaker remark-display bound holds a fortiori
                assert!((r + 1.0) / 2.0 <= r + (shift + 1.0) / 2.0);
            }
        }
    }

    #[test]
    fn second_main_on_shifted_periodic() {
        let c = ctx();
        // -π^(-1,-1) lifted so its poles sit above the target
        let f = special::make_pi(-1.0, -1.0)
            .unwrap()
            .negate()
            .tropical_plus(&TropicalPL::constant(0.5));
        let inst = SmtInstance::new(f, 0.5, vec![-1.0], 60.0).unwrap();
        for r in [3.0, 10.0, 50.0] {
            let rep = verify_second_main(&inst, r, &c).unwrap();
            assert!(rep.pass, "{rep:?}");
        }
    }

    #[test]
    fn second_main_rejects_duplicate_targets() {
        assert!(matches!(
            SmtInstance::new(tent(), 1.0, vec![0.5, 0.5], 10.0),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn second_main_randomized_with_proximity_form() {
        let c = ctx();
        let mut rng = generate::rng(2024);
        for i in 0..60 {
            let inst = generate::random_smt_instance(&mut rng, 12.0, &c).unwrap();
            for _ in 0..4 {
                let r = rng.random_range(0.5..12.0);
                let rep = verify_second_main(&inst, r, &c).unwrap();
                assert!(rep.pass, "instance {i}: {rep:?}");
                let rep = verify_smt_proximity_form(&inst, r, &c).unwrap();
                assert!(rep.pass, "instance {i} proximity form: {rep:?}");
            }
        }
    }
}
