//! Tanh-sinh rule on a finite interval, refined level by level.
//!
//! With `v = (π/2)·sinh t` the map `u = a + (b - a)(1 + tanh v)/2` sends
//! `t ∈ ℝ` to `(a, b)`; the trapezoid rule in `t` then converges double
//! exponentially even for integrable algebraic singularities at either end.
//! Distances to the nearer endpoint are computed as `(b - a)·e/(1 + e)` with
//! `e = exp(-2|v|)`, so abscissas next to `a = 0` keep full relative accuracy.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;

/// One interval of a composite rule, with its running trapezoid sums.
pub(crate) struct Segment {
    a: f64,
    b: f64,
    t_max: f64,
    level: u32,
    started: bool,
    /// Σ weight·f over all nodes evaluated so far (not yet multiplied by h).
    sum: Complex64,
    abs_sum: f64,
    estimate: Complex64,
    diff: f64,
    /// Smallest abscissa evaluated and |f| there, for the clipped-head remainder.
    min_node: Option<(f64, f64)>,
}

impl Segment {
    pub(crate) fn new(a: f64, b: f64, t_max: f64) -> Self {
        Self {
            a,
            b,
            t_max,
            level: 0,
            started: false,
            sum: Complex64::new(0.0, 0.0),
            abs_sum: 0.0,
            estimate: Complex64::new(0.0, 0.0),
            diff: f64::INFINITY,
            min_node: None,
        }
    }

    pub(crate) fn level(&self) -> u32 {
        self.level
    }

    pub(crate) fn estimate(&self) -> Complex64 {
        self.estimate
    }

    /// |S_l - S_{l-1}|, infinite before the second level.
    pub(crate) fn diff(&self) -> f64 {
        self.diff
    }

    /// Quadrature of |integrand|, used as the rounding-noise scale.
    pub(crate) fn abs_estimate(&self) -> f64 {
        self.abs_sum * step(self.level)
    }

    pub(crate) fn min_node(&self) -> Option<(f64, f64)> {
        self.min_node
    }

    /// Evaluates level 0 (`h = 1`) or the odd nodes of the next level.
    /// Returns the number of integrand evaluations.
    pub(crate) fn refine<F>(&mut self, f: &mut F) -> Result<usize>
    where
        F: FnMut(f64) -> Result<Complex64>,
    {
        let first = !self.started;
        self.started = true;
        let level = if first { 0 } else { self.level + 1 };
        let h = step(level);
        let mut evals = 0;
        let kmax = (self.t_max / h).floor() as i64;
        let stride = if first { 1 } else { 2 };
        let start = if first {
            -kmax
        } else {
            -kmax + ((kmax + 1) % 2)
        };
        let mut k = start;
        while k <= kmax {
            let t = k as f64 * h;
            if let Some((u, w)) = self.node(t) {
                let fu = f(u)?;
                evals += 1;
                self.sum += fu * w;
                self.abs_sum += fu.norm() * w;
                let mag = fu.norm();
                match self.min_node {
                    Some((m, _)) if m <= u => {}
                    _ => self.min_node = Some((u, mag)),
                }
            }
            k += stride;
        }
        let estimate = self.sum * h;
        if !first {
            self.diff = (estimate - self.estimate).norm();
        }
        self.estimate = estimate;
        self.level = level;
        Ok(evals)
    }

    fn node(&self, t: f64) -> Option<(f64, f64)> {
        let v = 0.5 * PI * t.sinh();
        let e = (-2.0 * v.abs()).exp();
        let width = self.b - self.a;
        let near = width * e / (1.0 + e);
        let u = if v < 0.0 {
            self.a + near
        } else {
            self.b - near
        };
        let w = PI * width * t.cosh() * e / ((1.0 + e) * (1.0 + e));
        if w == 0.0 || near == 0.0 {
            return None;
        }
        Some((u, w))
    }
}

fn step(level: u32) -> f64 {
    (0.5f64).powi(level as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn integrate(a: f64, b: f64, t_max: f64, levels: u32, f: impl Fn(f64) -> f64) -> (f64, f64) {
        let mut seg = Segment::new(a, b, t_max);
        let mut g = |u: f64| Ok(Complex64::new(f(u), 0.0));
        seg.refine(&mut g).unwrap();
        for _ in 0..levels {
            seg.refine(&mut g).unwrap();
        }
        (seg.estimate().re, seg.diff())
    }

    #[test]
    fn smooth_polynomial() {
        let (v, d) = integrate(0.0, 2.0, 4.0, 5, |u| u * u);
        assert!((v - 8.0 / 3.0).abs() < 1e-14, "{v}");
        assert!(d < 1e-10);
    }

    #[test]
    fn inverse_square_root_singularity() {
        let (v, _) = integrate(0.0, 1.0, 6.5, 6, |u| u.powf(-0.5));
        assert!((v - 2.0).abs() < 1e-13, "{v}");
    }

    #[test]
    fn strong_singularity_small_exponent() {
        // ∫₀¹ u^{-0.9} du = 10
        let (v, _) = integrate(0.0, 1.0, 6.5, 8, |u| u.powf(-0.9));
        assert!((v - 10.0).abs() < 1e-10, "{v}");
    }

    #[test]
    fn levels_only_add_new_nodes() {
        let mut seg = Segment::new(0.0, 1.0, 4.0);
        let mut g = |_u: f64| Ok(Complex64::new(1.0, 0.0));
        let n0 = seg.refine(&mut g).unwrap();
        let n1 = seg.refine(&mut g).unwrap();
        let n2 = seg.refine(&mut g).unwrap();
        assert_eq!(n0, 9);
        assert_eq!(n1, 8);
        assert_eq!(n2, 16);
        assert_eq!(seg.level(), 2);
    }
}
