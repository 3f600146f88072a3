//! Series reference values for the incomplete eta function.
//!
//! Expanding `1/(e^t + 1) = Σ_{n≥1} (-1)^{n-1} e^{-nt}` inside
//! `η(s, y) = (1/Γ(s)) ∫_y^∞ (t - y)^{s-1}/(e^t + 1) dt` and integrating term
//! by term gives
//!
//! ```text
//! η(s, y) = Σ_{n≥1} (-1)^{n-1} e^{-ny} n^{-s},   Re s > 0, y ≥ 0,
//! ```
//!
//! which at `y = 0` is the Dirichlet series of η itself. Two summation
//! strategies are provided, each with a rigorous truncation bound:
//!
//! * plain partial sums: for `y > 0` the tail is at most
//!   `e^{-(N+1)y}/(1 - e^{-y})`; for `y = 0` pairing consecutive terms gives
//!   `|tail| ≤ (|s|/σ)(N+1)^{-σ}`.
//! * the Cohen–Rodriguez Villegas–Zagier acceleration. The terms are moments
//!   `a_k = ∫₀¹ t^k w(t) dt` of `w(t) = (-ln t - y)_+^{s-1}/Γ(s)`, whose total
//!   variation is `M = e^{-y} Γ(σ)/|Γ(s)|`; with `n` terms the error is at most
//!   `2M/(3 + √8)^n`.
//!
//! Nothing here calls the quadrature module.

use num_complex::Complex64;

use crate::complexfn::{
    log_gamma, pow_realbase, pow_unchecked, prefactor_eta_to_zeta, ComplexScalar,
    DEFAULT_POLE_TOLERANCE,
};
use crate::error::{check_arg, Error, Result};

/// Smallest tolerance the oracle accepts.
pub const MIN_SERIES_TOL: f64 = 1e-14;
/// Hard cap on plain partial-sum terms.
pub const PLAIN_TERM_CAP: usize = 10_000_000;
/// Hard cap on accelerated terms; `(3 + √8)^n` overflows f64 beyond ~400.
pub const ACCELERATED_TERM_CAP: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: ComplexScalar,
    pub terms_used: usize,
    pub truncation_bound: f64,
}

fn check_inputs(s: ComplexScalar, y: f64, tol: f64) -> Result<()> {
    check_arg(s)?;
    if !(y >= 0.0 && y.is_finite()) {
        return Err(Error::Domain(format!(
            "shift y must be finite and ≥ 0, got {y}"
        )));
    }
    if !(tol >= MIN_SERIES_TOL && tol.is_finite()) {
        return Err(Error::Domain(format!(
            "series tolerance must be ≥ {MIN_SERIES_TOL:e}, got {tol}"
        )));
    }
    Ok(())
}

/// `η(s, y) = Σ (-1)^{n-1} e^{-ny} n^{-s}` to absolute accuracy `tol`.
///
/// Uses whichever of the plain sum (only for `y > 0`) and the accelerated
/// sum needs less work.
pub fn eta_series(s: ComplexScalar, y: f64, tol: f64) -> Result<SeriesResult> {
    check_inputs(s, y, tol)?;
    let accelerated = accelerated_terms(s, y, tol);
    if y > 0.0 {
        let plain = plain_terms_shifted(y, tol);
        let cheaper_plain = match accelerated {
            Ok(n) => plain <= 4 * n,
            Err(_) => true,
        };
        if cheaper_plain && plain <= PLAIN_TERM_CAP {
            return Ok(plain_sum(s, y, plain, shifted_tail_bound(y, plain)));
        }
    }
    let n = accelerated?;
    accelerated_sum(s, y, n)
}

/// Plain partial sums only; the reference the accelerated path is checked against.
pub fn eta_series_plain(s: ComplexScalar, y: f64, tol: f64) -> Result<SeriesResult> {
    check_inputs(s, y, tol)?;
    if y > 0.0 {
        let n = plain_terms_shifted(y, tol);
        if n > PLAIN_TERM_CAP {
            return Err(Error::ToleranceUnreachable {
                tol,
                cap: PLAIN_TERM_CAP,
            });
        }
        return Ok(plain_sum(s, y, n, shifted_tail_bound(y, n)));
    }
    let ratio = s.norm() / s.re;
    let n = (ratio / tol).powf(1.0 / s.re).ceil();
    if n.is_nan() || n > PLAIN_TERM_CAP as f64 {
        return Err(Error::ToleranceUnreachable {
            tol,
            cap: PLAIN_TERM_CAP,
        });
    }
    let n = (n as usize).max(1);
    let bound = ratio * ((n + 1) as f64).powf(-s.re);
    Ok(plain_sum(s, 0.0, n, bound))
}

/// Cohen–Rodriguez Villegas–Zagier accelerated sum only.
pub fn eta_series_accelerated(s: ComplexScalar, y: f64, tol: f64) -> Result<SeriesResult> {
    check_inputs(s, y, tol)?;
    let n = accelerated_terms(s, y, tol)?;
    accelerated_sum(s, y, n)
}

/// `ζ(s) = η(s)/(1 - 2^{1-s})` to absolute accuracy `tol`.
pub fn zeta_series(s: ComplexScalar, tol: f64) -> Result<SeriesResult> {
    prefactor_eta_to_zeta(s, DEFAULT_POLE_TOLERANCE)?;
    let factor = Complex64::new(1.0, 0.0) - pow_realbase(2.0, Complex64::new(1.0, 0.0) - s)?;
    let scale = factor.norm();
    let eta = eta_series(s, 0.0, (tol * scale).max(MIN_SERIES_TOL))?;
    let bound = eta.truncation_bound / scale;
    if bound > tol {
        return Err(Error::ToleranceUnreachable {
            tol,
            cap: ACCELERATED_TERM_CAP,
        });
    }
    Ok(SeriesResult {
        value: eta.value / factor,
        terms_used: eta.terms_used,
        truncation_bound: bound,
    })
}

fn plain_terms_shifted(y: f64, tol: f64) -> usize {
    // e^{-(N+1)y}/(1 - e^{-y}) ≤ tol
    let needed = (-(tol * (-(-y).exp_m1())).ln() / y).ceil() - 1.0;
    if needed > PLAIN_TERM_CAP as f64 {
        PLAIN_TERM_CAP + 1
    } else {
        (needed.max(1.0)) as usize
    }
}

fn shifted_tail_bound(y: f64, n: usize) -> f64 {
    (-((n + 1) as f64) * y).exp() / (-(-y).exp_m1())
}

fn plain_sum(s: ComplexScalar, y: f64, n: usize, bound: f64) -> SeriesResult {
    let minus_s = -s;
    let mut sum = Complex64::new(0.0, 0.0);
    // Summed from the smallest term up.
    for k in (1..=n).rev() {
        let kf = k as f64;
        let mut term = pow_unchecked(kf, minus_s);
        if y > 0.0 {
            term *= (-kf * y).exp();
        }
        if k % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    SeriesResult {
        value: sum,
        terms_used: n,
        truncation_bound: bound,
    }
}

const CVZ_BASE_LN: f64 = 1.762_747_174_039_086; // ln(3 + √8)

fn accelerated_terms(s: ComplexScalar, y: f64, tol: f64) -> Result<usize> {
    let sigma = Complex64::new(s.re, 0.0);
    let ln_mass = -y + log_gamma(sigma)?.re - log_gamma(s)?.re;
    let n = ((std::f64::consts::LN_2 + ln_mass - tol.ln()) / CVZ_BASE_LN)
        .ceil()
        .max(1.0);
    if n > ACCELERATED_TERM_CAP as f64 {
        return Err(Error::ToleranceUnreachable {
            tol,
            cap: ACCELERATED_TERM_CAP,
        });
    }
    Ok(n as usize)
}

fn accelerated_sum(s: ComplexScalar, y: f64, n: usize) -> Result<SeriesResult> {
    let sigma = Complex64::new(s.re, 0.0);
    let ln_mass = -y + log_gamma(sigma)?.re - log_gamma(s)?.re;
    let nf = n as f64;
    let mut d = (CVZ_BASE_LN * nf).exp();
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut sum = Complex64::new(0.0, 0.0);
    let minus_s = -s;
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        let m = kf + 1.0;
        let mut a_k = pow_unchecked(m, minus_s);
        if y > 0.0 {
            a_k *= (-m * y).exp();
        }
        sum += a_k * c;
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    let bound = 2.0 * (ln_mass - CVZ_BASE_LN * nf).exp();
    Ok(SeriesResult {
        value: sum / d,
        terms_used: n,
        truncation_bound: bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn alternating_harmonic_is_ln2() {
        let r = eta_series(c(1.0, 0.0), 0.0, 1e-14).unwrap();
        assert!((r.value - LN_2).norm() < 1e-14, "{}", r.value);
        assert!(r.truncation_bound <= 1e-14);
    }

    #[test]
    fn eta_two_is_pi_squared_over_twelve() {
        let r = eta_series(c(2.0, 0.0), 0.0, 1e-14).unwrap();
        assert!((r.value - PI * PI / 12.0).norm() < 1e-14);
    }

    #[test]
    fn mercator_series_for_shifted_s1() {
        for y in [0.05, 0.5, 1.0, 3.0] {
            let r = eta_series(c(1.0, 0.0), y, 1e-14).unwrap();
            let exact = (-y).exp().ln_1p();
            assert!(
                (r.value - exact).norm() < 2e-14,
                "y = {y}: {} vs {exact}",
                r.value
            );
        }
    }

    #[test]
    fn zeta_series_closed_forms() {
        let z2 = zeta_series(c(2.0, 0.0), 1e-13).unwrap();
        assert!((z2.value - PI * PI / 6.0).norm() < 1e-13);
        let z4 = zeta_series(c(4.0, 0.0), 1e-13).unwrap();
        assert!((z4.value - PI.powi(4) / 90.0).norm() < 1e-13);
        assert!(matches!(
            zeta_series(c(1.0, 0.0), 1e-12),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn zeta_at_first_critical_zero_is_small() {
        let z = zeta_series(c(0.5, 14.134_725), 1e-12).unwrap();
        assert!(z.value.norm() < 1e-4, "{}", z.value.norm());
    }

    #[test]
    fn zeta_half_matches_known_value() {
        // ζ(1/2) = -1.4603545088095868...
        let z = zeta_series(c(0.5, 0.0), 1e-13).unwrap();
        assert!(
            (z.value.re + 1.460_354_508_809_586_8).abs() < 1e-12,
            "{}",
            z.value
        );
    }

    #[test]
    fn accelerated_matches_plain_for_large_real_part() {
        for s in [c(2.0, 0.0), c(3.0, 0.0), c(2.5, 1.0), c(4.0, -3.0)] {
            let acc = eta_series_accelerated(s, 0.0, 1e-14).unwrap();
            let plain = eta_series_plain(s, 0.0, 1e-13).unwrap();
            assert!((acc.value - plain.value).norm() <= 1e-12, "s = {s}");
        }
    }

    #[test]
    fn shifted_tail_bound_is_honest() {
        for (s, y) in [(c(0.5, 3.0), 0.7), (c(1.5, 2.0), 0.5), (c(0.3, 14.13), 2.0)] {
            let r = eta_series_plain(s, y, 1e-12).unwrap();
            let longer = plain_sum(s, y, r.terms_used + 10, 0.0);
            assert!(
                (longer.value - r.value).norm() <= r.truncation_bound,
                "s = {s}, y = {y}"
            );
        }
    }

    #[test]
    fn accelerated_bound_is_honest_against_tight_reference() {
        for (s, y) in [(c(0.3, 5.0), 0.0), (c(0.5, 14.13), 0.5), (c(2.0, 1.0), 0.0)] {
            let loose = eta_series_accelerated(s, y, 1e-6).unwrap();
            let tight = eta_series_accelerated(s, y, 1e-14).unwrap();
            assert!((loose.value - tight.value).norm() <= loose.truncation_bound + 1e-13);
        }
    }

    #[test]
    fn strategies_agree_for_shifted_argument() {
        let s = c(1.5, 2.0);
        let a = eta_series_accelerated(s, 0.5, 1e-14).unwrap();
        let p = eta_series_plain(s, 0.5, 1e-14).unwrap();
        assert!((a.value - p.value).norm() < 1e-13);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            eta_series(c(0.0, 1.0), 0.0, 1e-12),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eta_series(c(1.0, 0.0), -1.0, 1e-12),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eta_series(c(1.0, 0.0), 0.0, 1e-15),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn tolerance_unreachable_on_huge_plain_sum() {
        let r = eta_series_plain(c(0.1, 0.0), 0.0, 1e-14);
        assert!(matches!(r, Err(Error::ToleranceUnreachable { .. })));
    }

    #[test]
    fn conjugate_symmetry() {
        let s = c(0.7, 9.0);
        for y in [0.0, 0.4] {
            let a = eta_series(s, y, 1e-13).unwrap().value;
            let b = eta_series(s.conj(), y, 1e-13).unwrap().value;
            assert!((a.conj() - b).norm() <= 1e-15 * (1.0 + a.norm()));
        }
    }
}
