use thiserror::Error;

/// Errors shared by the function algebra, the functionals and the solvers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A lazy generator cannot materialize the requested window, e.g. an
    /// exponential whose values would overflow the largest finite scalar.
    #[error("window exceeded: {0}")]
    WindowExceeded(String),

    /// A breakpoint query would enumerate more events than the configured cap.
    #[error("breakpoint budget exceeded: window needs {needed} events, cap is {cap}")]
    BudgetExceeded { needed: usize, cap: usize },

    /// A constructor was called with parameters outside its domain.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// A structural spec (periodic event list, equation data) is inconsistent.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    /// A verifier hypothesis does not hold for the given instance.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// A claimed solution fails its defining equation on the check grid.
    #[error("not a solution: {0}")]
    NotASolution(String),

    /// A quantity is undefined on the whole requested range
    /// (e.g. `log log T` when `T ≤ 1` everywhere).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Malformed JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_finite(value: f64, what: &str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameters(format!(
            "{what} must be finite, got {value}"
        )))
    }
}
