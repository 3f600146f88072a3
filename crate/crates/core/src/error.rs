use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by every numerical entry point in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// `2^s - 2` is within the pole tolerance of zero.
    #[error("prefactor pole at s = {}", format_complex(.s))]
    Pole { s: Complex64, denom_magnitude: f64 },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("no convergence after {level} refinement levels (error {err_estimate:e} > target {target:e})")]
    NonConvergence {
        level: u32,
        err_estimate: f64,
        target: f64,
    },

    #[error("integrand |{value:e}| exceeds declared envelope {bound:e} at y = {at}")]
    EnvelopeViolation { at: f64, value: f64, bound: f64 },

    #[error("Richardson steps disagree by {disagreement:e} (tolerance {tolerance:e}); reduce h0")]
    StepTooLarge { disagreement: f64, tolerance: f64 },

    #[error("tolerance {tol:e} unreachable within {cap} terms")]
    ToleranceUnreachable { tol: f64, cap: usize },

    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Formats a complex number in the `a+bi` syntax accepted by the CLI,
/// dropping a zero imaginary part.
pub fn format_complex(z: &Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

pub(crate) fn ensure_finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Overflow(format!("{what} is not representable")))
    }
}

pub(crate) fn check_arg(s: Complex64) -> Result<()> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite order s = {s}")));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "order must satisfy Re(s) > 0, got s = {}",
            format_complex(&s)
        )));
    }
    Ok(())
}
