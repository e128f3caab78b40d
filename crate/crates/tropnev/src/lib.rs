//! Value distribution of continuous piecewise-linear functions over the
//! max-plus semiring.
//!
//! The max-plus (tropical) semiring endows `ℝ ∪ {-∞}` with
//!
//! * addition `x ⊕ y = max(x, y)`,
//! * multiplication `x ⊗ y = x + y`,
//!
//! so that a "tropical meromorphic function" is nothing but a continuous
//! piecewise-linear function `f: ℝ → ℝ` with arbitrary real one-sided
//! slopes.  A downward kink of `f` (slope drops by `τ`) plays the role of a
//! pole of multiplicity `τ`, an upward kink that of a root.
//!
//! This crate provides
//!
//! * [`pl`] — an exact algebra of such functions: a closed set of
//!   combinators (`max`, `+`, scaling, shifts) over a finite breakpoint
//!   representation, plus lazy generators for functions with infinitely
//!   many breakpoints (tropical exponentials, periodic extensions,
//!   trigonometric cell solutions);
//! * [`nevanlinna`] — the proximity/counting/characteristic functionals
//!   `m`, `n`, `N`, `T`, the Jensen and Poisson–Jensen identities as
//!   executable verifiers, and growth-order estimation;
//! * [`inequalities`] — finite-radius verifiers for the first and second
//!   main theorems, the shift-quotient proximity bound and the scalar
//!   lemmas behind them;
//! * [`diff_poly`] — tropical difference Laurent polynomials with the
//!   Valiron–Mohon'ko, Mohon'ko and Clunie bounds;
//! * [`special`] — the explicit function families (sawtooth blocks
//!   `π^(a,b)`, tropical exponentials `e_α`) and closed-form solvers for
//!   the first- and second-order ultra-discrete equations
//!   `y(x+1) = c·y(x)` and `y(x+1) + y(x-1) = c·y(x)`;
//! * [`plot`] — dependency-free SVG rendering of functions and sweeps.
//!
//! All functions are immutable after construction and cheap to clone
//! (`Arc`-shared expression trees), so values may be freely shared across
//! threads.

pub mod diff_poly;
mod error;
pub mod generate;
pub mod inequalities;
pub mod nevanlinna;
pub mod pl;
pub mod plot;
pub mod report;
pub mod semiring;
pub mod special;

pub use error::{Error, Result};
pub use pl::{BreakpointEvent, BreakpointKind, Context, TropicalPL};
pub use report::VerificationReport;
