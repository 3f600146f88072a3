// `f(t) = 1/(e^{-t} + 1)` has unit norm in the exponential-type space X₁,
// and the modulus of the fractional integral never exceeds the integral of
// the modulus.
//
// ```text
// cargo run --example norm_and_bound
// ```

use fraczeta::checks::{lemma3_bound_check, norm_x1_pieces};
use fraczeta::format_complex;
use fraczeta::quadrature::EvalConfig;
use num_complex::Complex64;

pub fn run_example() -> fraczeta::Result<()> {
    let cfg = EvalConfig::default();
    let (right, left) = norm_x1_pieces(&cfg)?;
    println!("∫₀^∞ f(t)e^(-t) dt  = {right:.15}");
    println!("∫₀^∞ f(-t)e^(-t) dt = {left:.15}");
    println!("‖f‖                 = {:.15}", right + left);
    println!();
    println!(
        "{:>10} {:>5} {:>22} {:>22}  result",
        "s", "x", "|Γ(s) I^s f|", "Γ(σ) η(σ, -x)"
    );
    for (s, x) in [
        (Complex64::new(2.0, 5.0), 0.0),
        (Complex64::new(0.5, 30.0), -1.0),
        (Complex64::new(1.5, 0.0), -0.5),
    ] {
        let r = lemma3_bound_check(s, x, &cfg)?;
        let (lhs, rhs) = r.sides.unwrap_or_default();
        println!(
            "{:>10} {:>5} {:>22.15e} {:>22.15e}  {}",
            format_complex(&s),
            x,
            lhs,
            rhs,
            r.status
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fraczeta::Result<()> {
    run_example()
}
