//! Seeded random instance generators for the verifier suites.
//!
//! Functions are built from slopes rather than values so slope magnitudes
//! stay inside `[-5, 5]`; second-main instances draw their targets strictly
//! below the pole floor of the generated function, which makes the theorem
//! hypothesis hold by construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::inequalities::SmtInstance;
use crate::nevanlinna::pole_floor;
use crate::pl::{Context, TropicalPL};
use crate::special;

/// Deterministic generator: a fixed stream cipher keyed by the seed, so
/// identical seeds reproduce identical suites across platforms.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A finite piecewise-linear function with 3–12 breakpoints, slopes drawn
/// from `[-5, 5]` and breakpoints spread over `[-8, 8]`.
pub fn random_finite_pl(rng: &mut ChaCha8Rng) -> TropicalPL {
    let n = rng.random_range(3..=12usize);
    let mut xs: Vec<f64> = (0..n).map(|_| rng.random_range(-8.0..8.0)).collect();
    xs.sort_by(f64::total_cmp);
    // keep breakpoints apart so slopes stay well-conditioned
    for i in 1..n {
        if xs[i] - xs[i - 1] < 0.05 {
            xs[i] = xs[i - 1] + 0.05;
        }
    }
    let mut slopes = Vec::with_capacity(n + 1);
    let mut last: f64 = rng.random_range(-5.0..5.0);
    slopes.push(last);
    for _ in 0..n {
        let mut s = rng.random_range(-5.0..5.0);
        if (s - last).abs() < 0.05 {
            s = if s >= last { s + 0.1 } else { s - 0.1 };
        }
        slopes.push(s);
        last = s;
    }
    let mut y = rng.random_range(-3.0..3.0);
    let mut points = Vec::with_capacity(n);
    points.push((xs[0], y));
    for i in 1..n {
        y += slopes[i] * (xs[i] - xs[i - 1]);
        points.push((xs[i], y));
    }
    TropicalPL::from_points(points, slopes[0], slopes[n]).expect("generated anchors are valid")
}

/// A finite function optionally wrapped with a periodic block or a mild
/// exponential term, covering all generator kinds the functionals consume.
pub fn random_function(rng: &mut ChaCha8Rng) -> TropicalPL {
    let base = random_finite_pl(rng);
    match rng.random_range(0..4u8) {
        0 | 1 => base,
        2 => {
            let a = -rng.random_range(0.2..3.0);
            let b = -rng.random_range(0.2..3.0);
            let block = special::make_pi(a, b).expect("negative parameters");
            let weight = rng.random_range(-3.0..3.0);
            base.tropical_plus(&block.tropical_scale(weight))
        }
        _ => {
            let alpha = rng.random_range(1.2..2.0);
            let weight = rng.random_range(0.01..0.1);
            let e = TropicalPL::exponential(alpha).expect("valid base");
            base.tropical_plus(&e.tropical_scale(weight))
        }
    }
}

/// A random second-main instance whose hypothesis `max(a_j) < L_f` holds by
/// construction: targets are drawn at least 0.1 below the pole floor of the
/// padded window.
pub fn random_smt_instance(
    rng: &mut ChaCha8Rng,
    radius_cap: f64,
    ctx: &Context,
) -> Result<SmtInstance> {
    let f = random_function(rng);
    let c = rng.random_range(0.1..2.0);
    let pad = radius_cap + c;
    let floor = pole_floor(&f, -pad, pad, ctx)?;
    let ceiling = if floor.is_finite() { floor } else { 10.0 };
    let q = rng.random_range(1..=4usize);
    let mut targets = Vec::with_capacity(q);
    while targets.len() < q {
        let a = ceiling - 0.1 - rng.random_range(0.0..6.0);
        if targets.iter().all(|&t: &f64| (t - a).abs() > 1e-3) {
            targets.push(a);
        }
    }
    SmtInstance::new(f, c, targets, radius_cap)
}

/// Random radii in `(r_lo, r_hi)`.
pub fn random_radii(rng: &mut ChaCha8Rng, count: usize, r_lo: f64, r_hi: f64) -> Vec<f64> {
    (0..count).map(|_| rng.random_range(r_lo..r_hi)).collect()
}
