//! Semi-infinite integrals `∫₀^∞ u^{s-1} w(u) du` with an algebraic
//! singularity at the origin and exponential decay at infinity.
//!
//! The range is cut into a singular head `[0, split_point]`, handled by
//! tanh-sinh, and geometrically growing panels up to a truncation point `U`
//! chosen from an analytic tail bound. Every segment is refined level by
//! level until its level-to-level difference fits its share of the
//! tolerance; the reported error is the sum of those differences, the tail
//! bound, and the clipped part of the head below the smallest representable
//! abscissa.
//!
//! For the Fermi weight `1/(e^{x+u} + 1)` with `x ≥ 0` the integrand is
//! analytic in the open sector `|arg u| < π/2` (its poles sit at
//! `u = -x + iπ(2k+1)`), so [`fermi_power_integral`] integrates along a ray
//! `u = r·e^{iθ}` inside that sector. For `|Im s| = τ` the exact value is of
//! order `e^{-πτ/2}` while the real-axis integrand is of order one; tilting
//! the ray by `θ = sign(τ)(π/2 - δ)` with `δ = min(π/2, 4/τ)` leaves only an
//! `e^{τδ} ≈ e^4` cancellation instead of `e^{πτ/2}`.

mod tanh_sinh;

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::complexfn::{
    pow_unchecked, upper_incomplete_gamma, ComplexScalar, DEFAULT_POLE_TOLERANCE,
};
use crate::error::{check_arg, ensure_finite, Error, Result};
use tanh_sinh::Segment;

/// Tolerances and refinement limits for every numerical evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum tanh-sinh level; level `l` uses step `2^{-l}`.
    pub max_level: u32,
    /// End of the singular head segment.
    pub split_point: f64,
    /// Share of `abs_tol` the truncated tail may contribute.
    pub tail_tol_fraction: f64,
    /// Radius around zeros of `2^s - 2` treated as a pole.
    pub pole_tolerance: f64,
    /// Largest accepted disagreement between Richardson steps in numerical
    /// derivatives, relative to `1 + |derivative|`.
    pub deriv_tol: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-11,
            rel_tol: 1e-11,
            max_level: 10,
            split_point: 1.0,
            tail_tol_fraction: 0.1,
            pole_tolerance: DEFAULT_POLE_TOLERANCE,
            deriv_tol: 1e-4,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Domain(msg));
        if !(self.abs_tol >= 1e-15 && self.abs_tol.is_finite()) {
            return bad(format!("abs_tol must be ≥ 1e-15, got {}", self.abs_tol));
        }
        if !(self.rel_tol >= 1e-15 && self.rel_tol.is_finite()) {
            return bad(format!("rel_tol must be ≥ 1e-15, got {}", self.rel_tol));
        }
        if !(1..=12).contains(&self.max_level) {
            return bad(format!(
                "max_level must be in 1..=12, got {}",
                self.max_level
            ));
        }
        if !(self.split_point > 0.0 && self.split_point.is_finite()) {
            return bad(format!(
                "split_point must be positive, got {}",
                self.split_point
            ));
        }
        if !(self.tail_tol_fraction > 0.0 && self.tail_tol_fraction < 1.0) {
            return bad(format!(
                "tail_tol_fraction must be in (0, 1), got {}",
                self.tail_tol_fraction
            ));
        }
        if !(self.pole_tolerance >= 0.0 && self.pole_tolerance.is_finite()) {
            return bad(format!(
                "pole_tolerance must be ≥ 0, got {}",
                self.pole_tolerance
            ));
        }
        if !(self.deriv_tol > 0.0 && self.deriv_tol.is_finite()) {
            return bad(format!(
                "deriv_tol must be positive, got {}",
                self.deriv_tol
            ));
        }
        Ok(())
    }
}

/// Value of one quadrature with its a posteriori error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: ComplexScalar,
    pub err_estimate: f64,
    pub n_evals: usize,
    /// Finite upper limit `U` (radius along the integration ray).
    pub truncation_point: f64,
}

/// Declared bound `|inner(y)| ≤ constant · e^{-rate·y}` for `y ≥ -x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayEnvelope {
    pub constant: f64,
    pub rate: f64,
}

/// `∫₀^∞ u^{s-1} / (e^{x+u} + 1) du`, i.e. `Γ(s)·η(s, x)`.
pub fn fermi_power_integral(s: ComplexScalar, x: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    cfg.validate()?;
    fermi_power_integral_with_target(s, x, cfg, cfg.abs_tol)
}

/// Angle of the integration ray for order `s`.
pub(crate) fn ray_angle(s: ComplexScalar) -> f64 {
    const ROTATION_MARGIN: f64 = 4.0;
    let tau = s.im.abs();
    if tau == 0.0 {
        return 0.0;
    }
    let delta = (ROTATION_MARGIN / tau).min(FRAC_PI_2);
    (FRAC_PI_2 - delta).copysign(s.im)
}

/// [`fermi_power_integral`] with an explicit absolute target, so callers that
/// divide by a small factor (Γ(s)) can ask for a proportionally smaller error.
pub(crate) fn fermi_power_integral_with_target(
    s: ComplexScalar,
    x: f64,
    cfg: &EvalConfig,
    abs_target: f64,
) -> Result<QuadResult> {
    check_arg(s)?;
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "shift x must be finite and ≥ 0, got {x}"
        )));
    }

    let theta = ray_angle(s);
    let dir = Complex64::new(theta.cos(), theta.sin());
    let cos_theta = dir.re;
    // I = e^{iθs} · J,  J = ∫₀^∞ r^{s-1} w(x + r e^{iθ}) dr
    let phase = Complex64::new(0.0, theta) * s;
    let scale = phase.re.exp();
    let abs_target_j = abs_target / scale;
    let sigma = s.re;

    let tail = |u: f64| -> Result<f64> {
        let decay = (-x - u * cos_theta).exp();
        Ok((-x).exp() / (1.0 - decay)
            * cos_theta.powf(-sigma)
            * upper_incomplete_gamma(sigma, u * cos_theta)?)
    };
    let weight = |r: f64| -> Result<Complex64> { Ok(fermi_weight(dir * r + x)) };
    let ratio = theta.cos().max(0.02);

    let raw = integrate_power_weighted(s, weight, tail, ratio, cfg, abs_target_j)?;
    let factor = phase.exp();
    Ok(QuadResult {
        value: ensure_finite(raw.value * factor, "integral")?,
        err_estimate: raw.err_estimate * scale,
        n_evals: raw.n_evals,
        truncation_point: raw.truncation_point,
    })
}

/// `1/(e^z + 1)` for `Re z ≥ 0`, written to avoid overflow.
#[inline]
fn fermi_weight(z: Complex64) -> Complex64 {
    let e = (-z).exp();
    e / (e + 1.0)
}

/// `∫₀^∞ u^{α-1} inner(u - x) du` for `x ≤ 0` along the real axis, with the
/// tail bounded through the caller's decay envelope.
pub fn weighted_outer_integral<F>(
    alpha: ComplexScalar,
    x: f64,
    inner: F,
    envelope: DecayEnvelope,
    cfg: &EvalConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<ComplexScalar>,
{
    cfg.validate()?;
    weighted_outer_integral_with_target(alpha, x, inner, envelope, cfg, cfg.abs_tol)
}

pub(crate) fn weighted_outer_integral_with_target<F>(
    alpha: ComplexScalar,
    x: f64,
    inner: F,
    envelope: DecayEnvelope,
    cfg: &EvalConfig,
    abs_target: f64,
) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<ComplexScalar>,
{
    check_arg(alpha)?;
    if !(x <= 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "upper limit x must be finite and ≤ 0, got {x}"
        )));
    }
    if !(envelope.constant >= 0.0 && envelope.rate > 0.0 && envelope.constant.is_finite()) {
        return Err(Error::Domain(format!(
            "invalid decay envelope {envelope:?}"
        )));
    }
    let DecayEnvelope { constant, rate } = envelope;
    let sigma = alpha.re;
    let tail = |u: f64| -> Result<f64> {
        Ok(constant
            * (rate * x).exp()
            * rate.powf(-sigma)
            * upper_incomplete_gamma(sigma, rate * u)?)
    };
    let checked = |u: f64| -> Result<Complex64> {
        let y = u - x;
        let value = inner(y)?;
        let bound = constant * (-rate * y).exp();
        let mag = value.norm();
        if !mag.is_finite() || mag > bound * (1.0 + 1e-9) + 1e-300 {
            return Err(Error::EnvelopeViolation {
                at: y,
                value: mag,
                bound,
            });
        }
        Ok(value)
    };
    integrate_power_weighted(alpha, checked, tail, 1.0, cfg, abs_target)
}

const HEAD_T_MAX: f64 = 6.5;
const PANEL_T_MAX: f64 = 4.0;
const MAX_PANEL: f64 = 4.0;
const MIN_LEVEL: u32 = 3;
const MAX_TRUNCATION: f64 = 1e7;

/// Core driver: `∫₀^∞ r^{s-1} g(r) dr` given a tail bound
/// `T(U) ≥ |∫_U^∞ r^{s-1} g(r) dr|` and a panel growth ratio.
fn integrate_power_weighted<G, T>(
    s: ComplexScalar,
    g: G,
    tail_bound: T,
    panel_ratio: f64,
    cfg: &EvalConfig,
    abs_target: f64,
) -> Result<QuadResult>
where
    G: Fn(f64) -> Result<Complex64>,
    T: Fn(f64) -> Result<f64>,
{
    let tail_target = cfg.tail_tol_fraction * abs_target;
    let split = cfg.split_point;
    let truncation = choose_truncation(&tail_bound, 2.0 * split, tail_target)?;
    let tail_err = tail_bound(truncation)?;

    let mut segments = vec![Segment::new(0.0, split, HEAD_T_MAX)];
    let mut left = split;
    while left < truncation {
        let len = (left * panel_ratio).min(MAX_PANEL);
        let right = (left + len).min(truncation);
        segments.push(Segment::new(left, right, PANEL_T_MAX));
        left = right;
    }

    let exponent = s - 1.0;
    let mut integrand = |r: f64| -> Result<Complex64> { Ok(pow_unchecked(r, exponent) * g(r)?) };

    let mut n_evals = 0;
    for seg in segments.iter_mut() {
        for _ in 0..=MIN_LEVEL {
            n_evals += seg.refine(&mut integrand)?;
        }
    }

    // Greedy: refine the segment with the largest level difference until the
    // summed differences fit the target. Segments whose difference is already
    // at rounding level cannot improve and are left alone.
    let quad_share = 1.0 - cfg.tail_tol_fraction;
    loop {
        let total: Complex64 = segments.iter().map(Segment::estimate).sum();
        let target = quad_share * abs_target.max(cfg.rel_tol * total.norm());
        let quad_err: f64 = segments.iter().map(Segment::diff).sum();
        if quad_err <= target {
            break;
        }
        let worst = segments
            .iter_mut()
            .filter(|seg| seg.diff() > 64.0 * f64::EPSILON * seg.abs_estimate())
            .max_by(|a, b| a.diff().total_cmp(&b.diff()));
        match worst {
            Some(seg) if seg.level() < cfg.max_level => n_evals += seg.refine(&mut integrand)?,
            _ => {
                return Err(Error::NonConvergence {
                    level: cfg.max_level,
                    err_estimate: quad_err + tail_err,
                    target: target + tail_target,
                })
            }
        }
    }

    let value: Complex64 = segments.iter().map(Segment::estimate).sum();
    let quad_err: f64 = segments.iter().map(Segment::diff).sum();
    let head_remainder = match segments[0].min_node() {
        // ∫₀^r t^{σ-1}|g| ≈ |f(r)|·r/σ
        Some((r_min, f_mag)) => f_mag * r_min / s.re,
        None => 0.0,
    };
    Ok(QuadResult {
        value: ensure_finite(value, "integral")?,
        err_estimate: quad_err + tail_err + head_remainder,
        n_evals: n_evals.max(1),
        truncation_point: truncation,
    })
}

/// Smallest `U ≥ u_min` (to ~1e-3 relative) with `tail_bound(U) ≤ target`.
fn choose_truncation<T>(tail_bound: &T, u_min: f64, target: f64) -> Result<f64>
where
    T: Fn(f64) -> Result<f64>,
{
    if tail_bound(u_min)? <= target {
        return Ok(u_min);
    }
    let mut lo = u_min;
    let mut hi = u_min * 2.0;
    while tail_bound(hi)? > target {
        lo = hi;
        hi *= 2.0;
        if hi > MAX_TRUNCATION {
            return Err(Error::NonConvergence {
                level: 0,
                err_estimate: tail_bound(hi)?,
                target,
            });
        }
    }
    while (hi - lo) > 1e-3 * hi {
        let mid = 0.5 * (lo + hi);
        if tail_bound(mid)? <= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
