//! Tropical difference Laurent polynomials in a function and its shifts.
//!
//! A polynomial is a finite tropical sum (pointwise max) of terms
//!
//! ```text
//! a_λ(x) ⊗ f(x ⊎ c)^⊗λ  =  a_λ(x) + Σ_j λ_j · f(x + c_j)
//! ```
//!
//! over multi-indices `λ ∈ ℝ^(m+1)` aligned with the shift vector
//! `c = (0, c_1, …, c_m)`, `c_j ≥ 0`.  Exponents are arbitrary reals, so
//! "Laurent" terms (negative components) are allowed.  The coefficient
//! extrema `Ω`, `Ω̄`, `Υ` and the degree `max ‖λ‖` drive the
//! Valiron–Mohon'ko, Mohon'ko and Clunie proximity bounds.

use serde::{Deserialize, Serialize};

use crate::error::{require_finite, Error, Result};
use crate::nevanlinna::proximity;
use crate::pl::{Context, FunctionSpec, TropicalPL};
use crate::report::VerificationReport;
use crate::semiring::pos;

#[derive(Clone, Debug)]
pub struct Term {
    pub lambda: Vec<f64>,
    pub coeff: TropicalPL,
}

/// A tropical difference Laurent polynomial `P(x, f)`.
#[derive(Clone, Debug)]
pub struct DifferenceLaurentPolynomial {
    /// `c_0 = 0, c_1, …, c_m`, strictly increasing, all non-negative.
    shifts: Vec<f64>,
    terms: Vec<Term>,
}

const INDEX_EQ_TOL: f64 = 1e-12;

fn indices_equal(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|(x, y)| (x - y).abs() <= INDEX_EQ_TOL * x.abs().max(y.abs()).max(1.0))
}

impl DifferenceLaurentPolynomial {
    pub fn new(shifts: Vec<f64>, terms: Vec<(Vec<f64>, TropicalPL)>) -> Result<Self> {
        if shifts.is_empty() || shifts[0] != 0.0 {
            return Err(Error::InvalidSpec(
                "shift vector must start with c_0 = 0".into(),
            ));
        }
        for &c in &shifts {
            require_finite(c, "shift")?;
            if c < 0.0 {
                return Err(Error::InvalidSpec(format!("shifts must be >= 0, got {c}")));
            }
        }
        if shifts.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidSpec(
                "shifts must be strictly increasing".into(),
            ));
        }
        if terms.is_empty() {
            return Err(Error::InvalidSpec(
                "polynomial needs at least one term".into(),
            ));
        }
        let mut built = Vec::with_capacity(terms.len());
        for (lambda, coeff) in terms {
            if lambda.len() != shifts.len() {
                return Err(Error::InvalidSpec(format!(
                    "multi-index length {} does not match {} shifts",
                    lambda.len(),
                    shifts.len()
                )));
            }
            for &l in &lambda {
                require_finite(l, "exponent")?;
            }
            if built
                .iter()
                .any(|t: &Term| indices_equal(&t.lambda, &lambda))
            {
                return Err(Error::InvalidSpec(
                    "multi-indices must be pairwise distinct".into(),
                ));
            }
            built.push(Term { lambda, coeff });
        }
        Ok(Self {
            shifts,
            terms: built,
        })
    }

    pub fn shifts(&self) -> &[f64] {
        &self.shifts
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn norm(lambda: &[f64]) -> f64 {
        lambda.iter().sum()
    }

    /// Total degree `max_λ ‖λ‖` (may be negative for Laurent polynomials).
    pub fn degree(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| Self::norm(&t.lambda))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Smallest index norm `min_λ ‖λ‖`.
    pub fn min_norm(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| Self::norm(&t.lambda))
            .fold(f64::INFINITY, f64::min)
    }

    /// `P(x, f) = max_λ { a_λ(x) + Σ_j λ_j f(x + c_j) }`.
    pub fn eval(&self, f: &TropicalPL, x: f64) -> Result<f64> {
        let mut best = f64::NEG_INFINITY;
        for t in &self.terms {
            let mut v = t.coeff.eval(x)?;
            for (&l, &c) in t.lambda.iter().zip(&self.shifts) {
                if l != 0.0 {
                    v += l * f.eval(x + c)?;
                }
            }
            best = best.max(v);
        }
        Ok(best)
    }

    /// `P(·, f)` as a piecewise-linear function of `x`.
    pub fn as_function(&self, f: &TropicalPL) -> TropicalPL {
        let mut acc: Option<TropicalPL> = None;
        for t in &self.terms {
            let mut term = t.coeff.clone();
            for (&l, &c) in t.lambda.iter().zip(&self.shifts) {
                if l != 0.0 {
                    term = term.tropical_plus(&f.shift(c).tropical_scale(l));
                }
            }
            acc = Some(match acc {
                None => term,
                Some(a) => a.tropical_max(&term),
            });
        }
        acc.expect("polynomial has terms")
    }

    /// Largest coefficient `Ω[P](x) = max_λ a_λ(x)`.
    pub fn omega(&self) -> TropicalPL {
        max_fold(self.terms.iter().map(|t| t.coeff.clone()))
    }

    /// `Ω̄[P](x) = max_λ (-a_λ(x))`.
    pub fn omega_bar(&self) -> TropicalPL {
        max_fold(self.terms.iter().map(|t| t.coeff.negate()))
    }

    /// Leading-coefficient envelope `Υ[P](x) = max over ‖λ‖ = deg(P)`.
    pub fn upsilon(&self, ctx: &Context) -> TropicalPL {
        let deg = self.degree();
        max_fold(
            self.terms
                .iter()
                .filter(|t| (Self::norm(&t.lambda) - deg).abs() <= ctx.value_tol(deg))
                .map(|t| t.coeff.clone()),
        )
    }

    /// Indices of maximal norm (the set defining `Υ`).
    pub fn leading_indices(&self, ctx: &Context) -> Vec<&[f64]> {
        let deg = self.degree();
        self.terms
            .iter()
            .filter(|t| (Self::norm(&t.lambda) - deg).abs() <= ctx.value_tol(deg))
            .map(|t| t.lambda.as_slice())
            .collect()
    }

    /// Tropical product `P ⊗ Q`: Minkowski sum of index sets over the union
    /// of the shift vectors; colliding indices merge by `⊕` of coefficients.
    /// Pointwise, `eval(P⊗Q) = eval(P) + eval(Q)`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let mut shifts = self.shifts.clone();
        for &c in &other.shifts {
            if !shifts.iter().any(|&s| (s - c).abs() <= INDEX_EQ_TOL) {
                shifts.push(c);
            }
        }
        shifts.sort_by(f64::total_cmp);
        let remap = |poly: &Self, lambda: &[f64]| -> Vec<f64> {
            let mut out = vec![0.0; shifts.len()];
            for (&l, &c) in lambda.iter().zip(&poly.shifts) {
                let k = shifts
                    .iter()
                    .position(|&s| (s - c).abs() <= INDEX_EQ_TOL)
                    .expect("shift present in union");
                out[k] += l;
            }
            out
        };
        let mut terms: Vec<Term> = Vec::new();
        for tp in &self.terms {
            for tq in &other.terms {
                let mut lambda = remap(self, &tp.lambda);
                for (slot, l) in remap(other, &tq.lambda).into_iter().enumerate() {
                    lambda[slot] += l;
                }
                let coeff = tp.coeff.tropical_plus(&tq.coeff);
                match terms.iter_mut().find(|t| indices_equal(&t.lambda, &lambda)) {
                    Some(existing) => existing.coeff = existing.coeff.tropical_max(&coeff),
                    None => terms.push(Term { lambda, coeff }),
                }
            }
        }
        Ok(Self { shifts, terms })
    }

    /// `max over λ in the given index set of Σ_j (sign·λ_j)(f(x+c_j) - f(x))`.
    fn spread_over<'a>(
        &self,
        indices: impl Iterator<Item = &'a [f64]>,
        f: &TropicalPL,
        sign: f64,
    ) -> TropicalPL {
        let mut acc: Option<TropicalPL> = None;
        for lambda in indices {
            let mut term = TropicalPL::constant(0.0);
            for (&l, &c) in lambda.iter().zip(&self.shifts) {
                if l != 0.0 && c != 0.0 {
                    let quot = f.shift(c).tropical_minus(f);
                    term = term.tropical_plus(&quot.tropical_scale(sign * l));
                }
            }
            acc = Some(match acc {
                None => term,
                Some(a) => a.tropical_max(&term),
            });
        }
        acc.unwrap_or_else(|| TropicalPL::constant(0.0))
    }

    /// `max_λ (f(x ⊎ c) ⊘ f(x))^⊗λ` over all indices (`sign = 1`) or their
    /// negations (`sign = -1`).
    pub fn shift_spread(&self, f: &TropicalPL, sign: f64) -> TropicalPL {
        self.spread_over(self.terms.iter().map(|t| t.lambda.as_slice()), f, sign)
    }

    /// Same spread restricted to the leading indices of maximal norm.
    pub fn leading_spread(&self, f: &TropicalPL, sign: f64, ctx: &Context) -> TropicalPL {
        self.spread_over(self.leading_indices(ctx).into_iter(), f, sign)
    }

    /// Check `P(x, f) = 0` identically on `[lo, hi]`: breakpoints of the
    /// assembled function plus a uniform grid of 1000 points per unit.
    pub fn is_zero_solution(
        &self,
        f: &TropicalPL,
        lo: f64,
        hi: f64,
        ctx: &Context,
    ) -> Result<bool> {
        let g = self.as_function(f);
        let scale = g.sup_abs(lo, hi, ctx)?.max(f.sup_abs(lo, hi, ctx)?);
        let tol = ctx.value_tol(scale);
        let mut xs: Vec<f64> = g.breakpoints_in(lo, hi, ctx)?.iter().map(|e| e.x).collect();
        let n = (((hi - lo) * 1000.0).ceil() as usize).max(2);
        for k in 0..=n {
            xs.push(lo + (hi - lo) * k as f64 / n as f64);
        }
        for x in xs {
            if g.eval(x)?.abs() > tol {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn max_fold(parts: impl Iterator<Item = TropicalPL>) -> TropicalPL {
    let mut acc: Option<TropicalPL> = None;
    for p in parts {
        acc = Some(match acc {
            None => p,
            Some(a) => a.tropical_max(&p),
        });
    }
    acc.expect("nonempty fold")
}

/// Degree and coefficient extrema of a polynomial.
pub struct PolyStats {
    pub degree: f64,
    pub omega: TropicalPL,
    pub omega_bar: TropicalPL,
    pub upsilon: TropicalPL,
}

pub fn poly_stats(p: &DifferenceLaurentPolynomial, ctx: &Context) -> PolyStats {
    PolyStats {
        degree: p.degree(),
        omega: p.omega(),
        omega_bar: p.omega_bar(),
        upsilon: p.upsilon(ctx),
    }
}

// ---------------------------------------------------------------------
// verifiers
// ---------------------------------------------------------------------

/// Proximity of `f` against one term of `P`: for a term with `‖λ‖ > 0`,
///
/// ```text
/// ‖λ‖·m(r,f) <= Σ_j { λ_j⁺ m(r, f(x)⊘f(x+c_j)) + λ_j⁻ m(r, f(x+c_j)⊘f(x)) }
///               + m(r, 1∘⊘a_λ) + m(r, P(x,f))
/// ```
pub fn verify_ptof(
    p: &DifferenceLaurentPolynomial,
    f: &TropicalPL,
    term_index: usize,
    r: f64,
) -> Result<VerificationReport> {
    let term = p
        .terms
        .get(term_index)
        .ok_or_else(|| Error::InvalidParameters(format!("no term {term_index}")))?;
    let norm = DifferenceLaurentPolynomial::norm(&term.lambda);
    if norm <= 0.0 {
        return Err(Error::PreconditionViolated(format!(
            "term norm must be positive, got {norm}"
        )));
    }
    let lhs = norm * proximity(f, r)?;
    let mut rhs = proximity(&term.coeff.negate(), r)? + proximity(&p.as_function(f), r)?;
    for (&l, &c) in term.lambda.iter().zip(&p.shifts) {
        if c == 0.0 || l == 0.0 {
            continue;
        }
        let back = f.tropical_minus(&f.shift(c));
        let fwd = f.shift(c).tropical_minus(f);
        rhs += pos(l) * proximity(&back, r)? + pos(-l) * proximity(&fwd, r)?;
    }
    Ok(VerificationReport::inequality(
        "proximity_vs_polynomial",
        vec![r],
        vec![lhs],
        vec![rhs],
        format!("term with norm {norm}"),
    ))
}

/// Two-sided Valiron–Mohon'ko bound, as the pair of one-sided estimates
///
/// ```text
/// m(r,P(x,f)) - m(r, deg(P)·f)
///   <= m(r,Ω[P]) + m(r, max_λ (f(x⊎c)⊘f)^⊗λ)
///      + (deg(P) - min_λ‖λ‖)·m(r, 1∘⊘f)
/// m(r, deg(P)·f) - m(r,P(x,f))
///   <= m(r,Ω̄[P]) + m(r, max_λ (f(x⊎c)⊘f)^⊗(-λ))
/// ```
///
/// The correction term on the upper side accounts for index sets of mixed
/// norms: where `f < 0`, `max_λ ‖λ‖·f` equals `min_λ‖λ‖·f`, not
/// `deg(P)·f`, and the gap is `(deg(P)-‖λ‖)·f⁻ ≤ (deg(P)-min‖λ‖)·f⁻`
/// pointwise.  For norm-homogeneous polynomials (all `‖λ‖` equal) the
/// correction vanishes and the bound is the symmetric two-sided display.
/// The lower side needs no correction (it only consults a leading index).
pub fn verify_valiron_mohonko(
    p: &DifferenceLaurentPolynomial,
    f: &TropicalPL,
    r: f64,
) -> Result<VerificationReport> {
    let m_p = proximity(&p.as_function(f), r)?;
    let m_deg = proximity(&f.tropical_scale(p.degree()), r)?;
    let correction = (p.degree() - p.min_norm()) * proximity(&f.negate(), r)?;
    let up = proximity(&p.omega(), r)? + proximity(&p.shift_spread(f, 1.0), r)? + correction;
    let down = proximity(&p.omega_bar(), r)? + proximity(&p.shift_spread(f, -1.0), r)?;
    Ok(VerificationReport::inequality(
        "valiron_mohonko",
        vec![r, r],
        vec![m_p - m_deg, m_deg - m_p],
        vec![up, down],
        format!(
            "degree {}; norm spread correction {}",
            p.degree(),
            p.degree() - p.min_norm()
        ),
    ))
}

/// Mohon'ko-style bound for solutions of `P(x, f) = 0` with `‖λ‖ ≠ 0`
/// for every index: both `m(r,f)` and `m(r, 1∘⊘(f⊕a))` are bounded by
///
/// ```text
/// (max_λ |1/‖λ‖|)·{m(r,Ω[P]) + m(r,Ω̄[P])}
///   + Σ_j max_λ |λ_j/‖λ‖|·{m(r, f(x+c_j)⊘f) + m(r, f⊘f(x+c_j))}
/// ```
pub fn verify_mohonko(
    p: &DifferenceLaurentPolynomial,
    f: &TropicalPL,
    a: f64,
    r: f64,
    window: (f64, f64),
    ctx: &Context,
) -> Result<VerificationReport> {
    for t in &p.terms {
        let norm = DifferenceLaurentPolynomial::norm(&t.lambda);
        if norm.abs() <= ctx.eps {
            return Err(Error::PreconditionViolated(
                "every multi-index must have nonzero norm".into(),
            ));
        }
    }
    if !p.is_zero_solution(f, window.0, window.1, ctx)? {
        return Err(Error::NotASolution(format!(
            "P(x, f) does not vanish identically on [{}, {}]",
            window.0, window.1
        )));
    }
    let inv_norm_max = p
        .terms
        .iter()
        .map(|t| 1.0 / DifferenceLaurentPolynomial::norm(&t.lambda).abs())
        .fold(0.0_f64, f64::max);
    let mut rhs = inv_norm_max * (proximity(&p.omega(), r)? + proximity(&p.omega_bar(), r)?);
    for (j, &c) in p.shifts.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let ratio = p
            .terms
            .iter()
            .map(|t| (t.lambda[j] / DifferenceLaurentPolynomial::norm(&t.lambda)).abs())
            .fold(0.0_f64, f64::max);
        if ratio == 0.0 {
            continue;
        }
        let fwd = f.shift(c).tropical_minus(f);
        let back = f.tropical_minus(&f.shift(c));
        rhs += ratio * (proximity(&fwd, r)? + proximity(&back, r)?);
    }
    let m_f = proximity(f, r)?;
    let m_inv = proximity(&f.tropical_max(&TropicalPL::constant(a)).negate(), r)?;
    let weak_norms = p
        .terms
        .iter()
        .any(|t| DifferenceLaurentPolynomial::norm(&t.lambda).abs() < 1.0 - ctx.eps);
    let notes = if weak_norms {
        "bounds m(r,f) and m(r,1∘⊘(f⊕a)); some |‖λ‖| < 1 (general clause only)"
    } else {
        "bounds m(r,f) and m(r,1∘⊘(f⊕a))"
    };
    Ok(VerificationReport::inequality(
        "mohonko",
        vec![r, r],
        vec![m_f, m_inv],
        vec![rhs, rhs],
        notes,
    ))
}

/// Clunie-style bound for `H(x,f) ⊗ P(x,f) = Q(x,f)` with `deg(P) >= 0`
/// and `deg(Q) <= deg(H)`:
///
/// ```text
/// m(r,P(x,f)) <= m(r,Ω[P]) + m(r,Ω[Q]) + m(r, 1∘⊘Υ[H])
///                + m(r, max_{λ∈Λ[P]} (f(x⊎c)⊘f)^⊗λ)
///                + m(r, max_{μ∈Λ[Q]} (f(x⊎c)⊘f)^⊗μ)
///                + m(r, max_{ν∈Λ̂[H]} (f(x⊎c)⊘f)^⊗(-ν))
/// ```
pub fn verify_clunie(
    h: &DifferenceLaurentPolynomial,
    p: &DifferenceLaurentPolynomial,
    q: &DifferenceLaurentPolynomial,
    f: &TropicalPL,
    r: f64,
    window: (f64, f64),
    ctx: &Context,
) -> Result<VerificationReport> {
    if p.degree() < -ctx.eps {
        return Err(Error::PreconditionViolated(format!(
            "deg(P) must be >= 0, got {}",
            p.degree()
        )));
    }
    if q.degree() > h.degree() + ctx.value_tol(h.degree()) {
        return Err(Error::PreconditionViolated(format!(
            "deg(Q) = {} exceeds deg(H) = {}",
            q.degree(),
            h.degree()
        )));
    }
    // the equation H ⊗ P = Q must hold identically on the window
    let lhs_fn = h.as_function(f).tropical_plus(&p.as_function(f));
    let rhs_fn = q.as_function(f);
    let resid = lhs_fn.tropical_minus(&rhs_fn);
    let scale = lhs_fn
        .sup_abs(window.0, window.1, ctx)?
        .max(rhs_fn.sup_abs(window.0, window.1, ctx)?);
    let mut xs: Vec<f64> = resid
        .breakpoints_in(window.0, window.1, ctx)?
        .iter()
        .map(|e| e.x)
        .collect();
    let n = (((window.1 - window.0) * 1000.0).ceil() as usize).max(2);
    for k in 0..=n {
        xs.push(window.0 + (window.1 - window.0) * k as f64 / n as f64);
    }
    for x in xs {
        if resid.eval(x)?.abs() > ctx.value_tol(scale) {
            return Err(Error::NotASolution(format!(
                "H⊗P and Q differ by {} at x = {x}",
                resid.eval(x)?
            )));
        }
    }

    let lhs = proximity(&p.as_function(f), r)?;
    // where f < 0 a Laurent index of P with negative norm contributes
    // (-min‖λ‖)·f⁻; the displayed six-term bound assumes all ‖λ‖ >= 0
    let laurent_correction = pos(-p.min_norm()) * proximity(&f.negate(), r)?;
    let rhs = proximity(&p.omega(), r)?
        + proximity(&q.omega(), r)?
        + proximity(&h.upsilon(ctx).negate(), r)?
        + proximity(&p.shift_spread(f, 1.0), r)?
        + proximity(&q.shift_spread(f, 1.0), r)?
        + proximity(&h.leading_spread(f, -1.0, ctx), r)?
        + laurent_correction;
    Ok(VerificationReport::inequality(
        "clunie",
        vec![r],
        vec![lhs],
        vec![rhs],
        format!(
            "deg(H) = {}, deg(P) = {}, deg(Q) = {}, laurent correction {}",
            h.degree(),
            p.degree(),
            q.degree(),
            laurent_correction
        ),
    ))
}

// ---------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------

/// JSON form: `{"shifts":[...], "terms":[{"lambda":[...], "coeff":<function-spec>}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolySpec {
    pub shifts: Vec<f64>,
    pub terms: Vec<PolyTermSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyTermSpec {
    pub lambda: Vec<f64>,
    pub coeff: FunctionSpec,
}

impl PolySpec {
    pub fn build(&self) -> Result<DifferenceLaurentPolynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.lambda.clone(), t.coeff.build()?)))
            .collect::<Result<Vec<_>>>()?;
        DifferenceLaurentPolynomial::new(self.shifts.clone(), terms)
    }
}

impl DifferenceLaurentPolynomial {
    pub fn to_spec(&self) -> PolySpec {
        PolySpec {
            shifts: self.shifts.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| PolyTermSpec {
                    lambda: t.lambda.clone(),
                    coeff: t.coeff.to_spec(),
                })
                .collect(),
        }
    }
}
