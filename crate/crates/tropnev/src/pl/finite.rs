use crate::error::{require_finite, Error, Result};

/// A continuous piecewise-linear function with finitely many anchors.
///
/// The function passes through the anchors `(xs[i], ys[i])` (strictly
/// increasing in `x`), is affine between consecutive anchors, and extends
/// to `-∞` / `+∞` with the boundary slopes.  Anchors need not be genuine
/// breakpoints; kinks are detected at query time under the slope-equality
/// tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct FinitePl {
    pub(crate) xs: Vec<f64>,
    pub(crate) ys: Vec<f64>,
    pub(crate) left_slope: f64,
    pub(crate) right_slope: f64,
}

impl FinitePl {
    pub fn new(points: Vec<(f64, f64)>, left_slope: f64, right_slope: f64) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidSpec(
                "a finite function needs at least one anchor point".into(),
            ));
        }
        let mut pts = points;
        for &(x, y) in &pts {
            require_finite(x, "anchor x")?;
            require_finite(y, "anchor y")?;
        }
        require_finite(left_slope, "left slope")?;
        require_finite(right_slope, "right slope")?;
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        if pts.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::InvalidSpec(
                "anchor points must have strictly increasing x".into(),
            ));
        }
        let (xs, ys) = pts.into_iter().unzip();
        Ok(Self {
            xs,
            ys,
            left_slope,
            right_slope,
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.ys[0] + self.left_slope * (x - self.xs[0]);
        }
        if x >= self.xs[n - 1] {
            return self.ys[n - 1] + self.right_slope * (x - self.xs[n - 1]);
        }
        // first index with xs[i] >= x; x lies in (xs[i-1], xs[i]]
        let i = self.xs.partition_point(|&p| p < x);
        if self.xs[i] == x {
            return self.ys[i];
        }
        let (x0, y0) = (self.xs[i - 1], self.ys[i - 1]);
        let (x1, y1) = (self.xs[i], self.ys[i]);
        y0 + (y1 - y0) / (x1 - x0) * (x - x0)
    }

    /// Anchor positions strictly inside `(lo, hi)`.
    pub(crate) fn anchors_in(&self, lo: f64, hi: f64) -> (Vec<f64>, Vec<f64>) {
        let from = self.xs.partition_point(|&p| p <= lo);
        let to = self.xs.partition_point(|&p| p < hi);
        (self.xs[from..to].to_vec(), self.ys[from..to].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_interpolates_and_extends() {
        // tent: -|x|
        let f = FinitePl::new(vec![(0.0, 0.0)], 1.0, -1.0).unwrap();
        assert_eq!(f.eval(2.0), -2.0);
        assert_eq!(f.eval(-3.5), -3.5);
        assert_eq!(f.eval(0.0), 0.0);

        let g = FinitePl::new(vec![(0.0, 1.0), (2.0, 3.0)], 0.0, -2.0).unwrap();
        assert_eq!(g.eval(1.0), 2.0);
        assert_eq!(g.eval(-1.0), 1.0);
        assert_eq!(g.eval(3.0), 1.0);
    }

    #[test]
    fn rejects_bad_anchors() {
        assert!(FinitePl::new(vec![], 0.0, 0.0).is_err());
        assert!(FinitePl::new(vec![(0.0, 0.0), (0.0, 1.0)], 0.0, 0.0).is_err());
        assert!(FinitePl::new(vec![(0.0, f64::NAN)], 0.0, 0.0).is_err());
        assert!(FinitePl::new(vec![(0.0, 0.0)], f64::INFINITY, 0.0).is_err());
    }
}
