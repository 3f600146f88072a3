// The η → ζ prefactor `2^s/(2^s - 2)` has poles at `s = 1 + 2πik/ln 2`.
// Only the k = 0 pole is a pole of ζ itself; the others are cancelled by
// zeros of η, but the fractional-integral representation cannot be evaluated
// there.
//
// ```text
// cargo run --example pole_structure
// ```

use std::f64::consts::{LN_2, PI};

use fraczeta::complexfn::prefactor_eta_to_zeta;
use fraczeta::fractional::{zeta_complete, zeta_incomplete, EtaCoordinatePoint};
use fraczeta::quadrature::EvalConfig;
use num_complex::Complex64;

pub fn run_example() -> fraczeta::Result<()> {
    let cfg = EvalConfig::default();
    for k in -1..=1 {
        let s = Complex64::new(1.0, 2.0 * PI * k as f64 / LN_2);
        match zeta_incomplete(EtaCoordinatePoint::new(s, 0.5)?, &cfg) {
            Err(e) => println!("k = {k:>2}: {e}"),
            Ok(v) => println!("k = {k:>2}: unexpected value {}", v.value),
        }
    }
    println!();
    for eps in [1e-2, 1e-3, -1e-3, 1e-4] {
        let s = Complex64::new(1.0 + eps, 0.0);
        let z = zeta_complete(s, &cfg)?;
        let pre = prefactor_eta_to_zeta(s, cfg.pole_tolerance)?;
        println!(
            "s = 1 {:+e}: (s - 1)ζ(s) = {:.9}   |2^s - 2| = {:.3e}",
            eps,
            ((s - 1.0) * z.value).re,
            pre.denom_magnitude
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fraczeta::Result<()> {
    run_example()
}
