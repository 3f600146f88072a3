// ζ(s, x) recovered from the x-derivative of ζ(s + 1, x):
//
// ```text
// ζ(s, x) = (2^s - 1)/(2^s - 2) · ∂ζ(s + 1, x)/∂x
// ```
//
// ```text
// cargo run --example derivative_equation
// ```

use fraczeta::complexfn::prefactor_theorem2;
use fraczeta::fractional::{
    dx_zeta_frac, theorem2_residual, zeta_frac, FracCoordinatePoint, DEFAULT_DERIVATIVE_STEP,
};
use fraczeta::quadrature::EvalConfig;
use fraczeta::{format_complex, Error};
use num_complex::Complex64;

pub fn run_example() -> fraczeta::Result<()> {
    let cfg = EvalConfig::default();
    for (s, x) in [
        (Complex64::new(2.0, 0.0), -1.0),
        (Complex64::new(0.5, 0.0), -0.25),
        (Complex64::new(2.0, 5.0), -2.0),
    ] {
        let lhs = zeta_frac(FracCoordinatePoint::new(s, x)?, &cfg)?;
        let dx = dx_zeta_frac(
            FracCoordinatePoint::new(s + 1.0, x)?,
            &cfg,
            DEFAULT_DERIVATIVE_STEP,
        )?;
        let rhs = prefactor_theorem2(s, cfg.pole_tolerance)? * dx.value;
        println!(
            "s = {:<6} x = {:<5}  ζ(s,x) = {:<40}  from derivative = {:<40}  residual {:.1e}",
            format_complex(&s),
            x,
            format_complex(&lhs.value),
            format_complex(&rhs),
            theorem2_residual(s, x, &cfg)?
        );
    }
    match theorem2_residual(Complex64::new(1.0, 0.0), -1.0, &cfg) {
        Err(e @ Error::Pole { .. }) => println!("s = 1: {e}"),
        other => println!("s = 1: unexpected {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fraczeta::Result<()> {
    run_example()
}
