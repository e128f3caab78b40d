//! Scalar operations of the max-plus semiring.
//!
//! | notation | meaning |
//! |----------|--------------|
//! | `x ⊕ y`  | `max(x, y)`  |
//! | `x ⊗ y`  | `x + y`      |
//! | `x ⊘ y`  | `x - y`      |
//! | `x^⊗α`   | `α·x`        |
//!
//! The additive identity is `-∞`, the multiplicative identity is `0`.

/// Tropical addition `x ⊕ y = max(x, y)`.
#[inline]
pub fn oplus(x: f64, y: f64) -> f64 {
    x.max(y)
}

/// Tropical multiplication `x ⊗ y = x + y`.
#[inline]
pub fn otimes(x: f64, y: f64) -> f64 {
    x + y
}

/// Tropical division `x ⊘ y = x - y`.
#[inline]
pub fn oslash(x: f64, y: f64) -> f64 {
    x - y
}

/// Tropical power `x^⊗α = α·x`.
#[inline]
pub fn opow(x: f64, alpha: f64) -> f64 {
    alpha * x
}

/// Multiplicative identity `1∘`.
pub const ONE: f64 = 0.0;

/// Positive part `x⁺ = max(x, 0) = x ⊕ 1∘`.
#[inline]
pub fn pos(x: f64) -> f64 {
    x.max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semiring_identities() {
        assert_eq!(oplus(3.0, 5.0), 5.0);
        assert_eq!(otimes(3.0, 5.0), 8.0);
        assert_eq!(oslash(3.0, 5.0), -2.0);
        assert_eq!(opow(3.0, -2.0), -6.0);
        assert_eq!(oplus(f64::NEG_INFINITY, 4.0), 4.0);
        assert_eq!(otimes(ONE, 4.0), 4.0);
        assert_eq!(pos(-2.5), 0.0);
    }
}
