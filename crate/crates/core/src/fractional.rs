//! Incomplete eta and zeta functions and the improper-lower-bound
//! Riemann–Liouville fractional integral of `f(t) = 1/(e^{-t} + 1)`.
//!
//! Two coordinate conventions meet here. The incomplete functions
//!
//! ```text
//! η(s, x) = (1/Γ(s)) ∫_x^∞ (t - x)^{s-1}/(e^t + 1) dt,      x ≥ 0
//! ζ(s, x) = 2^s/(2^s - 2) · η(s, x)
//! ```
//!
//! live on `x ≥ 0` ([`EtaCoordinatePoint`]), while the fractional integral
//!
//! ```text
//! (₋∞I_x^s f)(x) = (1/Γ(s)) ∫_{-∞}^x (x - t)^{s-1} f(t) dt,   x ≤ 0
//! ```
//!
//! lives on `x ≤ 0` ([`FracCoordinatePoint`]). Substituting `t → -t` gives
//! `(₋∞I_x^s f)(x) = η(s, -x)`; [`FracCoordinatePoint::to_eta`] is the only
//! place that sign flip happens.

use num_complex::Complex64;

use crate::complexfn::{
    gamma, log_gamma, prefactor_eta_to_zeta, prefactor_theorem2, ComplexScalar,
};
use crate::error::{check_arg, ensure_finite, Error, Result};
use crate::oracle::{eta_series, MIN_SERIES_TOL};
use crate::quadrature::{
    fermi_power_integral_with_target, weighted_outer_integral_with_target, DecayEnvelope,
    EvalConfig,
};

/// Relative accuracy of `exp(log_gamma)`, folded into error estimates.
const GAMMA_REL_ERR: f64 = 1e-13;

/// Default first step for numerical x-derivatives.
pub const DEFAULT_DERIVATIVE_STEP: f64 = 1e-3;

/// `(s, x)` with `Re s > 0`, `x ≥ 0`: arguments of `η(s, x)` and `ζ(s, x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaCoordinatePoint {
    s: ComplexScalar,
    x: f64,
}

impl EtaCoordinatePoint {
    pub fn new(s: ComplexScalar, x: f64) -> Result<Self> {
        check_arg(s)?;
        if !(x >= 0.0 && x.is_finite()) {
            return Err(Error::Domain(format!(
                "incomplete-function shift must satisfy x ≥ 0, got {x}"
            )));
        }
        Ok(Self { s, x })
    }

    pub fn s(&self) -> ComplexScalar {
        self.s
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

/// `(s, x)` with `Re s > 0`, `x ≤ 0`: order and upper limit of `₋∞I_x^s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracCoordinatePoint {
    s: ComplexScalar,
    x: f64,
}

impl FracCoordinatePoint {
    pub fn new(s: ComplexScalar, x: f64) -> Result<Self> {
        check_arg(s)?;
        if !(x <= 0.0 && x.is_finite()) {
            return Err(Error::Domain(format!(
                "fractional-integral upper limit must satisfy x ≤ 0, got {x}"
            )));
        }
        Ok(Self { s, x })
    }

    pub fn s(&self) -> ComplexScalar {
        self.s
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn to_eta(self) -> EtaCoordinatePoint {
        // -0.0 would print oddly downstream
        EtaCoordinatePoint {
            s: self.s,
            x: -self.x + 0.0,
        }
    }
}

/// A function value with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: ComplexScalar,
    pub err_estimate: f64,
    pub n_evals: usize,
}

impl Estimate {
    fn scaled(self, factor: Complex64) -> Result<Self> {
        let value = ensure_finite(self.value * factor, "value")?;
        Ok(Self {
            value,
            err_estimate: self.err_estimate * factor.norm() + value.norm() * f64::EPSILON,
            n_evals: self.n_evals,
        })
    }
}

/// `η(s, x)`, computed as `∫₀^∞ u^{s-1}/(e^{x+u} + 1) du / Γ(s)`.
pub fn eta_incomplete(p: EtaCoordinatePoint, cfg: &EvalConfig) -> Result<Estimate> {
    cfg.validate()?;
    let g = gamma(p.s)?;
    let g_abs = g.norm();
    let q = fermi_power_integral_with_target(p.s, p.x, cfg, cfg.abs_tol * g_abs)?;
    let value = ensure_finite(q.value / g, "η")?;
    Ok(Estimate {
        value,
        err_estimate: q.err_estimate / g_abs + value.norm() * GAMMA_REL_ERR,
        n_evals: q.n_evals,
    })
}

/// `ζ(s, x) = 2^s/(2^s - 2) · η(s, x)`.
pub fn zeta_incomplete(p: EtaCoordinatePoint, cfg: &EvalConfig) -> Result<Estimate> {
    cfg.validate()?;
    let pre = prefactor_eta_to_zeta(p.s, cfg.pole_tolerance)?;
    eta_incomplete(p, cfg)?.scaled(pre.value)
}

/// `(₋∞I_x^s f)(x)` for `f(t) = 1/(e^{-t} + 1)`, equal to `η(s, -x)`.
pub fn frac_integral(p: FracCoordinatePoint, cfg: &EvalConfig) -> Result<Estimate> {
    eta_incomplete(p.to_eta(), cfg)
}

/// `ζ(s, x) = 2^s/(2^s - 2) · (₋∞I_x^s f)(x)` on `x ≤ 0`.
pub fn zeta_frac(p: FracCoordinatePoint, cfg: &EvalConfig) -> Result<Estimate> {
    zeta_incomplete(p.to_eta(), cfg)
}

/// `ζ(s)` for `Re s > 0` away from prefactor poles, as `zeta_frac(s, 0)`.
pub fn zeta_complete(s: ComplexScalar, cfg: &EvalConfig) -> Result<Estimate> {
    zeta_frac(FracCoordinatePoint::new(s, 0.0)?, cfg)
}

/// How the inner integral `(₋∞I_t^β f)(t)` is evaluated inside [`frac_compose_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InnerEvaluation {
    /// Series oracle; fast and independent of the outer quadrature.
    #[default]
    Series,
    /// Full nested quadrature through [`eta_incomplete`].
    Quadrature,
}

/// `(₋∞I_x^α)(₋∞I_x^β f)(x)` with the inner integral from the series oracle.
pub fn frac_compose(
    alpha: ComplexScalar,
    beta: ComplexScalar,
    x: f64,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    frac_compose_with(alpha, beta, x, cfg, InnerEvaluation::Series)
}

/// `(1/Γ(α)) ∫₀^∞ u^{α-1} η(β, u - x) du`, the composed fractional integral.
pub fn frac_compose_with(
    alpha: ComplexScalar,
    beta: ComplexScalar,
    x: f64,
    cfg: &EvalConfig,
    inner: InnerEvaluation,
) -> Result<Estimate> {
    cfg.validate()?;
    check_arg(alpha)?;
    check_arg(beta)?;
    if !(x <= 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "upper limit must satisfy x ≤ 0, got {x}"
        )));
    }
    let g_alpha = gamma(alpha)?;
    let g_abs = g_alpha.norm();

    // |η(β, y)| ≤ Γ(Re β)/|Γ(β)| · e^{-y}
    let envelope = DecayEnvelope {
        constant: (log_gamma(Complex64::new(beta.re, 0.0))?.re - log_gamma(beta)?.re).exp(),
        rate: 1.0,
    };
    let inner_tol = (0.01 * cfg.abs_tol).max(MIN_SERIES_TOL);
    let target = cfg.abs_tol * g_abs;
    let q = match inner {
        InnerEvaluation::Series => weighted_outer_integral_with_target(
            alpha,
            x,
            |y| Ok(eta_series(beta, y, inner_tol)?.value),
            envelope,
            cfg,
            target,
        )?,
        InnerEvaluation::Quadrature => weighted_outer_integral_with_target(
            alpha,
            x,
            |y| Ok(eta_incomplete(EtaCoordinatePoint::new(beta, y)?, cfg)?.value),
            envelope,
            cfg,
            target,
        )?,
    };
    let inner_err = match inner {
        InnerEvaluation::Series => inner_tol,
        InnerEvaluation::Quadrature => cfg.abs_tol.max(cfg.rel_tol * envelope.constant),
    };
    let value = ensure_finite(q.value / g_alpha, "composition")?;
    let spread = q.truncation_point.powf(alpha.re) / alpha.re;
    Ok(Estimate {
        value,
        err_estimate: (q.err_estimate + inner_err * spread) / g_abs + value.norm() * GAMMA_REL_ERR,
        n_evals: q.n_evals,
    })
}

/// `∂/∂x ζ(s, x)` on `x ≤ 0` from `zeta_frac`, by central differences with one
/// Richardson step (`h0`, `h0/2`); a second-order backward stencil is used when
/// `x + h0 > 0`.
pub fn dx_zeta_frac(p: FracCoordinatePoint, cfg: &EvalConfig, h0: f64) -> Result<Estimate> {
    cfg.validate()?;
    let s = p.s();
    prefactor_eta_to_zeta(s, cfg.pole_tolerance)?;
    let f = |xi: f64| zeta_frac(FracCoordinatePoint::new(s, xi)?, cfg);
    richardson_derivative(f, p.x(), h0, cfg.deriv_tol)
}

pub(crate) fn richardson_derivative<F>(f: F, x: f64, h0: f64, tol: f64) -> Result<Estimate>
where
    F: Fn(f64) -> Result<Estimate>,
{
    if !(h0 > 0.0 && h0.is_finite()) {
        return Err(Error::Domain(format!(
            "derivative step must be positive, got {h0}"
        )));
    }
    if !(x <= 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "derivative point must satisfy x ≤ 0, got {x}"
        )));
    }
    let mut evals = 0;
    let mut noise: f64 = 0.0;
    let mut eval = |xi: f64| -> Result<Complex64> {
        let e = f(xi)?;
        evals += e.n_evals;
        noise = noise.max(e.err_estimate);
        Ok(e.value)
    };
    let central = x + h0 <= 0.0;
    let (coarse, fine, noise_gain) = if central {
        let d = |h: f64, fp: Complex64, fm: Complex64| (fp - fm) / (2.0 * h);
        let h = h0;
        let coarse = d(h, eval(x + h)?, eval(x - h)?);
        let fine = d(h / 2.0, eval(x + h / 2.0)?, eval(x - h / 2.0)?);
        (coarse, fine, 3.0)
    } else {
        let f0 = eval(x)?;
        let h = h0;
        let fh = eval(x - h)?;
        let f2h = eval(x - 2.0 * h)?;
        let fh2 = eval(x - h / 2.0)?;
        let coarse = (3.0 * f0 - 4.0 * fh + f2h) / (2.0 * h);
        let fine = (3.0 * f0 - 4.0 * fh2 + fh) / h;
        (coarse, fine, 12.0)
    };
    let extrapolated = (4.0 * fine - coarse) / 3.0;
    let disagreement = (fine - coarse).norm();
    let tolerance = tol * (1.0 + extrapolated.norm());
    if disagreement > tolerance {
        return Err(Error::StepTooLarge {
            disagreement,
            tolerance,
        });
    }
    Ok(Estimate {
        value: ensure_finite(extrapolated, "derivative")?,
        err_estimate: disagreement / 3.0 + noise_gain * noise / h0,
        n_evals: evals,
    })
}

/// `|ζ(s, x) - (2^s - 1)/(2^s - 2) · ∂/∂x ζ(s + 1, x)|` with the default step.
pub fn theorem2_residual(s: ComplexScalar, x: f64, cfg: &EvalConfig) -> Result<f64> {
    theorem2_residual_with_step(s, x, cfg, DEFAULT_DERIVATIVE_STEP)
}

pub fn theorem2_residual_with_step(
    s: ComplexScalar,
    x: f64,
    cfg: &EvalConfig,
    h0: f64,
) -> Result<f64> {
    cfg.validate()?;
    let factor = prefactor_theorem2(s, cfg.pole_tolerance)?;
    let shifted = s + 1.0;
    let lhs = zeta_frac(FracCoordinatePoint::new(s, x)?, cfg)?;
    let dx = dx_zeta_frac(FracCoordinatePoint::new(shifted, x)?, cfg, h0)?;
    Ok((lhs.value - factor * dx.value).norm())
}
