use serde::{Deserialize, Serialize};

/// Default relative tolerance for verifier verdicts.
///
/// Slacks are compared against `REL_TOL * max(1, |lhs|, |rhs|)`: the
/// quantities being compared grow like `T(r, f)`, which is exponential in
/// `r` for the tropical exponentials, so a fixed absolute tolerance would
/// be meaningless.
pub const REL_TOL: f64 = 1e-8;

/// Outcome of checking one theorem-shaped identity or inequality at a set
/// of radii.  `slack[i] = rhs[i] - lhs[i]`; for inequality checks `pass`
/// means every slack is above `-tol`, for equality checks it means every
/// `|slack|` is below `tol`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub radii: Vec<f64>,
    pub lhs: Vec<f64>,
    pub rhs: Vec<f64>,
    pub slack: Vec<f64>,
    pub pass: bool,
    pub notes: String,
}

fn tol_for(lhs: f64, rhs: f64, rel_tol: f64) -> f64 {
    rel_tol * lhs.abs().max(rhs.abs()).max(1.0)
}

impl VerificationReport {
    /// Check `lhs[i] <= rhs[i]` at every radius.
    pub fn inequality(
        theorem_id: impl Into<String>,
        radii: Vec<f64>,
        lhs: Vec<f64>,
        rhs: Vec<f64>,
        notes: impl Into<String>,
    ) -> Self {
        Self::inequality_with_tol(theorem_id, radii, lhs, rhs, notes, REL_TOL)
    }

    pub fn inequality_with_tol(
        theorem_id: impl Into<String>,
        radii: Vec<f64>,
        lhs: Vec<f64>,
        rhs: Vec<f64>,
        notes: impl Into<String>,
        rel_tol: f64,
    ) -> Self {
        assert_eq!(lhs.len(), rhs.len());
        assert_eq!(lhs.len(), radii.len());
        let slack: Vec<f64> = lhs.iter().zip(&rhs).map(|(l, r)| r - l).collect();
        let pass = slack
            .iter()
            .zip(lhs.iter().zip(&rhs))
            .all(|(s, (l, r))| *s >= -tol_for(*l, *r, rel_tol));
        Self {
            theorem_id: theorem_id.into(),
            radii,
            lhs,
            rhs,
            slack,
            pass,
            notes: notes.into(),
        }
    }

    /// Check `lhs[i] == rhs[i]` at every radius.
    pub fn equality(
        theorem_id: impl Into<String>,
        radii: Vec<f64>,
        lhs: Vec<f64>,
        rhs: Vec<f64>,
        notes: impl Into<String>,
    ) -> Self {
        Self::equality_with_tol(theorem_id, radii, lhs, rhs, notes, REL_TOL)
    }

    pub fn equality_with_tol(
        theorem_id: impl Into<String>,
        radii: Vec<f64>,
        lhs: Vec<f64>,
        rhs: Vec<f64>,
        notes: impl Into<String>,
        rel_tol: f64,
    ) -> Self {
        assert_eq!(lhs.len(), rhs.len());
        assert_eq!(lhs.len(), radii.len());
        let slack: Vec<f64> = lhs.iter().zip(&rhs).map(|(l, r)| r - l).collect();
        let pass = slack
            .iter()
            .zip(lhs.iter().zip(&rhs))
            .all(|(s, (l, r))| s.abs() <= tol_for(*l, *r, rel_tol));
        Self {
            theorem_id: theorem_id.into(),
            radii,
            lhs,
            rhs,
            slack,
            pass,
            notes: notes.into(),
        }
    }

    pub fn min_slack(&self) -> f64 {
        self.slack.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs_slack(&self) -> f64 {
        self.slack.iter().fold(0.0_f64, |m, s| m.max(s.abs()))
    }
}
