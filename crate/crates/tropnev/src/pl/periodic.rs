use crate::error::{require_finite, Error, Result};
use crate::pl::window::Window;
use crate::pl::Context;

/// Periodic extension of a piecewise-linear cell.
///
/// The cell is given by anchors in `[0, period)`; the segment from the last
/// anchor wraps around to the first anchor of the next period, which makes
/// the extension continuous by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicPl {
    pub(crate) period: f64,
    pub(crate) xs: Vec<f64>,
    pub(crate) ys: Vec<f64>,
}

impl PeriodicPl {
    pub fn new(period: f64, points: Vec<(f64, f64)>) -> Result<Self> {
        require_finite(period, "period")?;
        if period <= 0.0 {
            return Err(Error::InvalidParameters(format!(
                "period must be positive, got {period}"
            )));
        }
        if points.is_empty() {
            return Err(Error::InvalidSpec(
                "a periodic cell needs at least one anchor point".into(),
            ));
        }
        let mut pts = points;
        for &(x, y) in &pts {
            require_finite(x, "cell anchor x")?;
            require_finite(y, "cell anchor y")?;
            if !(0.0..period).contains(&x) {
                return Err(Error::InvalidSpec(format!(
                    "cell anchor x = {x} outside [0, {period})"
                )));
            }
        }
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        if pts.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::InvalidSpec(
                "cell anchors must have strictly increasing x".into(),
            ));
        }
        let (xs, ys) = pts.into_iter().unzip();
        Ok(Self { period, xs, ys })
    }

    fn reduce(&self, x: f64) -> f64 {
        let mut t = x - self.period * (x / self.period).floor();
        if t >= self.period {
            t -= self.period;
        }
        if t < 0.0 {
            t += self.period;
        }
        t
    }

    pub fn eval(&self, x: f64) -> f64 {
        let t = self.reduce(x);
        let n = self.xs.len();
        if n == 1 {
            return self.ys[0];
        }
        if t < self.xs[0] {
            // wrap segment: (last - period, y_last) -> (first, y_first)
            let x0 = self.xs[n - 1] - self.period;
            let (y0, y1) = (self.ys[n - 1], self.ys[0]);
            return y0 + (y1 - y0) / (self.xs[0] - x0) * (t - x0);
        }
        let i = self.xs.partition_point(|&p| p <= t);
        if i == n {
            // segment from the last anchor forward to the wrapped first anchor
            let (x0, y0) = (self.xs[n - 1], self.ys[n - 1]);
            let (x1, y1) = (self.xs[0] + self.period, self.ys[0]);
            return y0 + (y1 - y0) / (x1 - x0) * (t - x0);
        }
        let (x0, y0) = (self.xs[i - 1], self.ys[i - 1]);
        let (x1, y1) = (self.xs[i], self.ys[i]);
        if t == x0 {
            return y0;
        }
        y0 + (y1 - y0) / (x1 - x0) * (t - x0)
    }

    pub(crate) fn window(&self, lo: f64, hi: f64, ctx: &Context) -> Result<Window> {
        let copies = (hi - lo) / self.period + 2.0;
        let needed = copies * self.xs.len() as f64;
        if needed > ctx.budget as f64 {
            return Err(Error::BudgetExceeded {
                needed: needed as usize,
                cap: ctx.budget,
            });
        }
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        let k0 = (lo / self.period).floor() as i64;
        let k1 = (hi / self.period).ceil() as i64;
        for k in k0..=k1 {
            let base = k as f64 * self.period;
            for (i, &xc) in self.xs.iter().enumerate() {
                let x = base + xc;
                if x > lo && x < hi {
                    xs.push(x);
                    ys.push(self.ys[i]);
                }
            }
        }
        Ok(Window::from_parts(
            lo,
            hi,
            self.eval(lo),
            self.eval(hi),
            xs,
            ys,
        ))
    }
}
