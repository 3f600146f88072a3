//! Accuracy claims of the quadrature engine against closed forms.

#![allow(clippy::excessive_precision)]

use std::f64::consts::{LN_2, PI};

use fraczeta::quadrature::{
    fermi_power_integral, weighted_outer_integral, DecayEnvelope, EvalConfig,
};
use fraczeta::Error;
use num_complex::Complex64;

/// `(s, x, Γ(s)η(s, x))`; the non-elementary entries come from a 30-digit
/// evaluation of `Γ(s)·Σ (-1)^{n-1} e^{-nx} n^{-s}`.
fn closed_forms() -> Vec<(Complex64, f64, Complex64)> {
    let r = |v: f64| Complex64::new(v, 0.0);
    vec![
        (r(1.0), 0.0, r(LN_2)),
        (r(2.0), 0.0, r(PI * PI / 12.0)),
        (r(1.0), 1.0, r((1.0 + (-1.0f64).exp()).ln())),
        (r(1.0), 5.0, r((-5.0f64).exp().ln_1p())),
        (r(0.1), 0.0, r(4.968_622_353_012_584_405_4)),
        (r(0.3), 0.0, r(1.689_942_082_069_844_276_5)),
        (r(0.5), 0.0, r(1.072_154_929_940_191_339_5)),
        (r(0.7), 0.0, r(0.833_622_774_667_205_875_46)),
        (
            Complex64::new(0.5, 3.0),
            0.7,
            Complex64::new(
                0.010_294_420_284_585_729_030_87,
                0.006_769_934_665_698_759_739_06,
            ),
        ),
    ]
}

fn with_tol(tol: f64) -> EvalConfig {
    EvalConfig {
        abs_tol: tol,
        rel_tol: tol,
        ..EvalConfig::default()
    }
}

#[test]
fn successes_meet_the_requested_tolerance() {
    for tol in [1e-6, 1e-8, 1e-10, 1e-11, 1e-12] {
        let cfg = with_tol(tol);
        for (s, x, exact) in closed_forms() {
            match fermi_power_integral(s, x, &cfg) {
                Ok(q) => {
                    let err = (q.value - exact).norm();
                    let allowed = cfg.abs_tol.max(cfg.rel_tol * exact.norm());
                    assert!(
                        err <= allowed,
                        "s={s} x={x} tol={tol:e}: error {err:e} > {allowed:e}"
                    );
                    assert!(
                        err <= q.err_estimate,
                        "s={s} x={x} tol={tol:e}: estimate {:e} < error {err:e}",
                        q.err_estimate
                    );
                }
                Err(Error::NonConvergence { .. }) => {}
                Err(e) => panic!("s={s} x={x}: {e}"),
            }
        }
    }
}

#[test]
fn strong_singularities_converge_at_default_config() {
    let cfg = EvalConfig::default();
    for (s, x, exact) in closed_forms().into_iter().filter(|(s, _, _)| s.re < 1.0) {
        let q = fermi_power_integral(s, x, &cfg).unwrap();
        assert!(
            (q.value - exact).norm() <= cfg.abs_tol.max(cfg.rel_tol * exact.norm()),
            "s={s}"
        );
    }
}

#[test]
fn outer_integral_closed_forms() {
    let cfg = EvalConfig::default();
    let env = DecayEnvelope {
        constant: 1.0,
        rate: 1.0,
    };
    let decay = |y: f64| Ok(Complex64::new((-y).exp(), 0.0));
    for (alpha, exact) in [(1.0, 1.0), (2.0, 1.0), (3.5, 3.323_350_970_447_842_6)] {
        let q = weighted_outer_integral(Complex64::new(alpha, 0.0), 0.0, decay, env, &cfg).unwrap();
        assert!(
            (q.value.re - exact).abs() <= cfg.abs_tol.max(cfg.rel_tol * exact),
            "α={alpha}"
        );
    }
}

#[test]
fn linearity_in_the_weight() {
    let cfg = EvalConfig::default();
    let alpha = Complex64::new(0.75, 2.0);
    let base = |y: f64| Ok(Complex64::new(1.0 / (y.exp() + 1.0), 0.0));
    let plain = weighted_outer_integral(
        alpha,
        -0.5,
        base,
        DecayEnvelope {
            constant: 1.0,
            rate: 1.0,
        },
        &cfg,
    )
    .unwrap();
    for c in [
        Complex64::new(2.5, -1.0),
        Complex64::new(-0.3, 0.7),
        Complex64::new(0.0, 4.0),
    ] {
        let scaled = weighted_outer_integral(
            alpha,
            -0.5,
            |y| Ok(c * base(y)?),
            DecayEnvelope {
                constant: c.norm(),
                rate: 1.0,
            },
            &cfg,
        )
        .unwrap();
        let diff = (scaled.value - c * plain.value).norm();
        assert!(
            diff <= 2.0 * scaled.err_estimate.max(c.norm() * plain.err_estimate),
            "c={c}: {diff:e}"
        );
    }
}

#[test]
fn pushing_the_truncation_point_further_changes_little() {
    // Inflating the declared envelope moves U outward without changing the
    // integrand; the results must agree to the tail share of abs_tol.
    let cfg = EvalConfig::default();
    let fermi = |y: f64| Ok(Complex64::new(1.0 / (y.exp() + 1.0), 0.0));
    let s = Complex64::new(1.5, 0.0);
    let reference = weighted_outer_integral(
        s,
        0.0,
        fermi,
        DecayEnvelope {
            constant: 1.0,
            rate: 1.0,
        },
        &cfg,
    )
    .unwrap();
    let mut last_u = reference.truncation_point;
    for inflate in [1e3, 1e6, 1e9] {
        let q = weighted_outer_integral(
            s,
            0.0,
            fermi,
            DecayEnvelope {
                constant: inflate,
                rate: 1.0,
            },
            &cfg,
        )
        .unwrap();
        assert!(q.truncation_point > last_u);
        last_u = q.truncation_point;
        let change = (q.value - reference.value).norm();
        assert!(
            change < cfg.tail_tol_fraction * cfg.abs_tol,
            "inflate {inflate:e}: change {change:e}"
        );
    }
}
