// Compares the quadrature path against the independent series oracle
// `η(s, y) = Σ (-1)^{n-1} e^{-ny} n^{-s}` for a few orders, including one on
// the critical line.
//
// ```text
// cargo run --example oracle_crosscheck
// ```

use fraczeta::format_complex;
use fraczeta::fractional::{frac_integral, FracCoordinatePoint};
use fraczeta::oracle::eta_series;
use fraczeta::quadrature::EvalConfig;
use num_complex::Complex64;

pub fn run_example() -> fraczeta::Result<()> {
    let cfg = EvalConfig::default();
    println!(
        "{:>12} {:>5} {:>44} {:>10} {:>8} {:>6}",
        "s", "x", "quadrature", "|diff|", "evals", "terms"
    );
    for (s, x) in [
        (Complex64::new(0.3, 0.0), 0.0),
        (Complex64::new(0.5, 14.13), 0.0),
        (Complex64::new(2.0, 5.0), -0.5),
        (Complex64::new(3.0, 1.0), -2.0),
    ] {
        let quad = frac_integral(FracCoordinatePoint::new(s, x)?, &cfg)?;
        let series = eta_series(s, -x, 1e-14)?;
        println!(
            "{:>12} {:>5} {:>44} {:>10.2e} {:>8} {:>6}",
            format_complex(&s),
            x,
            format_complex(&quad.value),
            (quad.value - series.value).norm(),
            quad.n_evals,
            series.terms_used
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fraczeta::Result<()> {
    run_example()
}
