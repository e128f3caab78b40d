use crate::pl::{BreakpointEvent, BreakpointKind, Context};

/// Exact restriction of a piecewise-linear function to a bounded window.
///
/// `xs` holds candidate kink positions strictly inside `(lo, hi)`; the
/// function is affine between consecutive candidates and between the window
/// edges and their nearest candidates.  Candidates need not be genuine
/// breakpoints (combinators keep the union of their operands' candidates);
/// [`Window::events`] filters them under the slope-equality tolerance.
#[derive(Clone, Debug)]
pub struct Window {
    pub lo: f64,
    pub hi: f64,
    pub y_lo: f64,
    pub y_hi: f64,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

impl Window {
    pub(crate) fn from_parts(
        lo: f64,
        hi: f64,
        y_lo: f64,
        y_hi: f64,
        xs: Vec<f64>,
        ys: Vec<f64>,
    ) -> Self {
        debug_assert!(lo < hi);
        debug_assert!(xs.windows(2).all(|w| w[0] < w[1]));
        Self {
            lo,
            hi,
            y_lo,
            y_hi,
            xs,
            ys,
        }
    }

    pub fn value_at(&self, x: f64) -> f64 {
        if x <= self.lo {
            return self.y_lo;
        }
        if x >= self.hi {
            return self.y_hi;
        }
        let i = self.xs.partition_point(|&p| p < x);
        if i < self.xs.len() && self.xs[i] == x {
            return self.ys[i];
        }
        let (x0, y0) = if i == 0 {
            (self.lo, self.y_lo)
        } else {
            (self.xs[i - 1], self.ys[i - 1])
        };
        let (x1, y1) = if i == self.xs.len() {
            (self.hi, self.y_hi)
        } else {
            (self.xs[i], self.ys[i])
        };
        y0 + (y1 - y0) / (x1 - x0) * (x - x0)
    }

    /// Chord slope of the affine cell containing `t` (for `t` strictly
    /// between candidates).
    pub fn cell_slope_at(&self, t: f64) -> f64 {
        let i = self.xs.partition_point(|&p| p < t);
        let (x0, y0) = if i == 0 {
            (self.lo, self.y_lo)
        } else {
            (self.xs[i - 1], self.ys[i - 1])
        };
        let (x1, y1) = if i == self.xs.len() {
            (self.hi, self.y_hi)
        } else {
            (self.xs[i], self.ys[i])
        };
        (y1 - y0) / (x1 - x0)
    }

    /// The full support sequence `(lo, y_lo), interior…, (hi, y_hi)`.
    fn support(&self) -> (Vec<f64>, Vec<f64>) {
        let mut xs = Vec::with_capacity(self.xs.len() + 2);
        let mut ys = Vec::with_capacity(self.xs.len() + 2);
        xs.push(self.lo);
        ys.push(self.y_lo);
        xs.extend_from_slice(&self.xs);
        ys.extend_from_slice(&self.ys);
        xs.push(self.hi);
        ys.push(self.y_hi);
        (xs, ys)
    }

    /// Breakpoint events strictly inside the window.
    ///
    /// Candidate positions closer than the dedup distance collapse into one
    /// event whose slope change spans the whole cluster; clusters touching a
    /// window edge are dropped (their outer slope is not observable here).
    pub fn events(&self, ctx: &Context) -> Vec<BreakpointEvent> {
        if self.xs.is_empty() {
            return Vec::new();
        }
        let (xs, ys) = self.support();
        let n = xs.len();
        let slope = |i: usize| (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);

        let mut out = Vec::new();
        let mut i = 1; // first interior index
        while i < n - 1 {
            // grow cluster [i, j] of points separated by < dedup distance
            let mut j = i;
            while j + 1 < n - 1 && xs[j + 1] - xs[j] <= ctx.dedup_distance(xs[j]) {
                j += 1;
            }
            let edge_touch = xs[i] - xs[i - 1] <= ctx.dedup_distance(xs[i]) && i == 1
                || xs[j + 1] - xs[j] <= ctx.dedup_distance(xs[j]) && j == n - 2;
            if !edge_touch {
                let left = slope(i - 1);
                let right = slope(j);
                if !ctx.slope_eq(left, right) {
                    let omega = right - left;
                    out.push(BreakpointEvent {
                        x: xs[i],
                        value: ys[i],
                        left_slope: left,
                        right_slope: right,
                        omega,
                        tau: omega.abs(),
                        kind: if omega < 0.0 {
                            BreakpointKind::Pole
                        } else {
                            BreakpointKind::Root
                        },
                    });
                }
            }
            i = j + 1;
        }
        out
    }

    pub(crate) fn map_x(mut self, offset: f64) -> Self {
        self.lo += offset;
        self.hi += offset;
        for x in &mut self.xs {
            *x += offset;
        }
        self
    }

    pub(crate) fn scale_values(mut self, factor: f64) -> Self {
        self.y_lo *= factor;
        self.y_hi *= factor;
        for y in &mut self.ys {
            *y *= factor;
        }
        self
    }
}

/// Merge two sorted candidate lists, deduplicating within the tolerance.
fn merge_grids(a: &[f64], b: &[f64], ctx: &Context) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) => {
                if x <= y {
                    i += 1;
                    x
                } else {
                    j += 1;
                    y
                }
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        match out.last() {
            Some(&prev) if next - prev <= ctx.dedup_distance(next) => {}
            _ => out.push(next),
        }
    }
    out
}

pub(crate) fn sum_windows(a: &Window, b: &Window, ctx: &Context) -> Window {
    let xs = merge_grids(&a.xs, &b.xs, ctx);
    let ys = xs.iter().map(|&x| a.value_at(x) + b.value_at(x)).collect();
    Window::from_parts(a.lo, a.hi, a.y_lo + b.y_lo, a.y_hi + b.y_hi, xs, ys)
}

pub(crate) fn max_windows(a: &Window, b: &Window, ctx: &Context) -> Window {
    let grid = merge_grids(&a.xs, &b.xs, ctx);
    // crossing points of a - b inside each affine cell
    let mut full = Vec::with_capacity(grid.len() + 2);
    full.push(a.lo);
    full.extend_from_slice(&grid);
    full.push(a.hi);
    let mut xs = Vec::with_capacity(grid.len());
    let mut ys = Vec::with_capacity(grid.len());
    for w in full.windows(2) {
        let (x0, x1) = (w[0], w[1]);
        let d0 = a.value_at(x0) - b.value_at(x0);
        let d1 = a.value_at(x1) - b.value_at(x1);
        if x0 > a.lo {
            xs.push(x0);
            ys.push(a.value_at(x0).max(b.value_at(x0)));
        }
        if (d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0) {
            let xc = x0 + d0 * (x1 - x0) / (d0 - d1);
            if xc - x0 > ctx.dedup_distance(xc) && x1 - xc > ctx.dedup_distance(xc) {
                xs.push(xc);
                ys.push(a.value_at(xc).max(b.value_at(xc)));
            }
        }
    }
    Window::from_parts(a.lo, a.hi, a.y_lo.max(b.y_lo), a.y_hi.max(b.y_hi), xs, ys)
}
