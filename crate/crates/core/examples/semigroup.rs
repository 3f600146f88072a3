// Composing two fractional integrals of orders α and β gives the integral
// of order α + β. The inner integral comes from the series oracle by
// default; pass `nested` to evaluate it by quadrature as well.
//
// ```text
// cargo run --release --example semigroup [nested]
// ```

use fraczeta::fractional::{
    frac_compose_with, frac_integral, FracCoordinatePoint, InnerEvaluation,
};
use fraczeta::quadrature::EvalConfig;
use num_complex::Complex64;

pub fn run_example() -> fraczeta::Result<()> {
    let nested = std::env::args().any(|a| a == "nested");
    let inner = if nested {
        InnerEvaluation::Quadrature
    } else {
        InnerEvaluation::Series
    };
    let cfg = EvalConfig::default();
    println!("inner evaluation: {inner:?}");
    for (a, b) in [(0.5, 0.5), (0.75, 1.25), (1.5, 0.3), (0.5, 0.25)] {
        let (alpha, beta) = (Complex64::new(a, 0.0), Complex64::new(b, 0.0));
        let x = -0.5;
        let composed = frac_compose_with(alpha, beta, x, &cfg, inner)?;
        let direct = frac_integral(FracCoordinatePoint::new(alpha + beta, x)?, &cfg)?;
        println!(
            "α={a:<5} β={b:<5} I^α I^β f = {:.15}   I^(α+β) f = {:.15}   diff {:.1e}",
            composed.value.re,
            direct.value.re,
            (composed.value - direct.value).norm()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fraczeta::Result<()> {
    run_example()
}
