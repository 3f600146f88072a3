// Finds the first nontrivial zero of ζ on the critical line by sampling
// `|ζ(1/2 + it)|` and refining the bracketed minimum with golden-section
// search.
//
// ```text
// cargo run --release --example critical_line_zero
// ```

use fraczeta::quadrature::EvalConfig;
use fraczeta::scan::zero_scan;

pub fn run_example() -> fraczeta::Result<()> {
    let cfg = EvalConfig::default();
    for (t_min, t_max, step) in [(14.0, 14.3, 0.01), (20.9, 21.1, 0.01), (2.0, 3.0, 0.1)] {
        let minima = zero_scan(t_min, t_max, step, &cfg)?;
        println!("[{t_min}, {t_max}] step {step}:");
        if minima.is_empty() {
            println!("  no interior minimum");
        }
        for m in minima {
            println!("  t* = {:.10}   |ζ(1/2 + it*)| = {:.2e}", m.t, m.abs_zeta);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fraczeta::Result<()> {
    run_example()
}
