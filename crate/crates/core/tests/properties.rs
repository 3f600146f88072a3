//! Randomised invariants.

use fraczeta::complexfn::{
    gamma, log_gamma, pow_realbase, prefactor_eta_to_zeta, prefactor_theorem2,
    DEFAULT_POLE_TOLERANCE,
};
use fraczeta::fractional::{frac_integral, FracCoordinatePoint};
use fraczeta::oracle::eta_series;
use fraczeta::quadrature::EvalConfig;
use num_complex::Complex64;
use proptest::prelude::*;

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #[test]
    fn complexfn_conjugate_symmetry(re in 0.05f64..20.0, im in -30.0f64..30.0, u in 0.01f64..50.0) {
        let s = Complex64::new(re, im);
        prop_assert!(close(log_gamma(s.conj()).unwrap(), log_gamma(s).unwrap().conj(), 1e-15));
        prop_assert_eq!(pow_realbase(u, s.conj()).unwrap(), pow_realbase(u, s).unwrap().conj());
        if let (Ok(p), Ok(q)) = (prefactor_eta_to_zeta(s, DEFAULT_POLE_TOLERANCE), prefactor_eta_to_zeta(s.conj(), DEFAULT_POLE_TOLERANCE)) {
            prop_assert!(close(q.value, p.value.conj(), 1e-15));
        }
        if let (Ok(p), Ok(q)) = (prefactor_theorem2(s, DEFAULT_POLE_TOLERANCE), prefactor_theorem2(s.conj(), DEFAULT_POLE_TOLERANCE)) {
            prop_assert!(close(q, p.conj(), 1e-15));
        }
    }

    #[test]
    fn gamma_recurrence(re in 0.1f64..10.0, im in -10.0f64..10.0) {
        let s = Complex64::new(re, im);
        let g1 = gamma(s + 1.0).unwrap();
        let g0 = gamma(s).unwrap();
        prop_assert!((g1 - s * g0).norm() <= 1e-12 * g1.norm(), "{}", (g1 - s * g0).norm() / g1.norm());
    }

    /// `2^s/(2^s - 2) · (1 - 2^{1-s}) = 1`. Next to a pole the product
    /// inherits a rounding error of order ε/|2^s - 2|, so points with
    /// |2^s - 2| < 1e-3 are excluded.
    #[test]
    fn prefactor_identity(re in 0.01f64..10.0, im in -40.0f64..40.0) {
        let s = Complex64::new(re, im);
        let pre = prefactor_eta_to_zeta(s, DEFAULT_POLE_TOLERANCE).unwrap();
        prop_assume!(pre.denom_magnitude >= 1e-3);
        let one_minus = Complex64::new(1.0, 0.0) - pow_realbase(2.0, Complex64::new(1.0, 0.0) - s).unwrap();
        prop_assert!((pre.value * one_minus - 1.0).norm() <= 1e-12);
    }

    #[test]
    fn oracle_conjugate_symmetry(re in 0.1f64..5.0, im in -20.0f64..20.0, y in 0.0f64..3.0) {
        let s = Complex64::new(re, im);
        let a = eta_series(s, y, 1e-12).unwrap();
        let b = eta_series(s.conj(), y, 1e-12).unwrap();
        prop_assert!((a.value.conj() - b.value).norm() <= 1e-14 * (1.0 + a.value.norm()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn frac_integral_conjugate_symmetry(re in 0.3f64..4.0, im in -15.0f64..15.0, x in -3.0f64..=0.0) {
        let cfg = EvalConfig::default();
        let s = Complex64::new(re, im);
        let a = frac_integral(FracCoordinatePoint::new(s, x).unwrap(), &cfg).unwrap();
        let b = frac_integral(FracCoordinatePoint::new(s.conj(), x).unwrap(), &cfg).unwrap();
        prop_assert!((a.value.conj() - b.value).norm() <= 2.0 * a.err_estimate);
    }

    #[test]
    fn frac_integral_matches_oracle(re in 0.3f64..4.0, im in -15.0f64..15.0, x in -3.0f64..=0.0) {
        let cfg = EvalConfig::default();
        let s = Complex64::new(re, im);
        let q = frac_integral(FracCoordinatePoint::new(s, x).unwrap(), &cfg).unwrap();
        let o = eta_series(s, -x, 1e-14).unwrap();
        prop_assert!((q.value - o.value).norm() <= q.err_estimate + o.truncation_bound);
    }

    /// For real s, η(s, ·) is real, positive and strictly decreasing.
    #[test]
    fn real_order_positive_and_decreasing(s in 0.1f64..6.0, x1 in -4.0f64..=0.0, gap in 0.05f64..2.0) {
        let cfg = EvalConfig::default();
        let s = Complex64::new(s, 0.0);
        // frac_integral(s, x) = η(s, -x): decreasing in -x means increasing in x.
        let lo = frac_integral(FracCoordinatePoint::new(s, x1 - gap).unwrap(), &cfg).unwrap();
        let hi = frac_integral(FracCoordinatePoint::new(s, x1).unwrap(), &cfg).unwrap();
        prop_assert_eq!(lo.value.im, 0.0);
        prop_assert!(lo.value.re > 0.0);
        prop_assert!(hi.value.re - lo.value.re > hi.err_estimate + lo.err_estimate);
    }
}
