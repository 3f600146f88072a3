// Values of η and ζ that have closed forms, computed through the
// fractional-integral representation.
//
// ```text
// cargo run --example closed_forms
// ```

use std::f64::consts::{LN_2, PI};

use fraczeta::fractional::{
    eta_incomplete, frac_integral, zeta_complete, EtaCoordinatePoint, FracCoordinatePoint,
};
use fraczeta::quadrature::EvalConfig;
use num_complex::Complex64;

pub fn run_example() -> fraczeta::Result<()> {
    let cfg = EvalConfig::default();
    let real = |v: f64| Complex64::new(v, 0.0);

    let rows = [
        ("ζ(2)", zeta_complete(real(2.0), &cfg)?, PI * PI / 6.0),
        ("ζ(4)", zeta_complete(real(4.0), &cfg)?, PI.powi(4) / 90.0),
        (
            "η(1, 0)",
            eta_incomplete(EtaCoordinatePoint::new(real(1.0), 0.0)?, &cfg)?,
            LN_2,
        ),
        (
            "I¹f(-1)",
            frac_integral(FracCoordinatePoint::new(real(1.0), -1.0)?, &cfg)?,
            (1.0 + (-1.0f64).exp()).ln(),
        ),
    ];

    println!(
        "{:<10} {:>22} {:>22} {:>10} {:>10}",
        "quantity", "computed", "exact", "|error|", "estimate"
    );
    for (name, est, exact) in rows {
        println!(
            "{:<10} {:>22.16} {:>22.16} {:>10.2e} {:>10.2e}",
            name,
            est.value.re,
            exact,
            (est.value - exact).norm(),
            est.err_estimate
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fraczeta::Result<()> {
    run_example()
}
