// Looks for pairs of orders with ζ(s₁, x) = ζ(s₂, x) along a range of x.
// Purely exploratory: the scan reports deviations and asserts nothing.
//
// ```text
// cargo run --example symmetry_scan
// ```

use fraczeta::format_complex;
use fraczeta::quadrature::EvalConfig;
use fraczeta::scan::symmetry_scan;
use num_complex::Complex64;

pub fn run_example() -> fraczeta::Result<()> {
    let cfg = EvalConfig::default();
    let xs: Vec<f64> = (0..=8).map(|k| -0.25 * k as f64 + 0.0).collect();
    let pairs = [
        (Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0)),
        (Complex64::new(1.5, 3.0), Complex64::new(1.5, -3.0)),
        (
            Complex64::new(0.5, 14.134725),
            Complex64::new(0.5, 21.022040),
        ),
    ];
    for (s1, s2) in pairs {
        let scan = symmetry_scan(s1, s2, &xs, &cfg)?;
        println!(
            "s1 = {}, s2 = {}: max |ζ(s1,x) - ζ(s2,x)| = {:.6e}",
            format_complex(&s1),
            format_complex(&s2),
            scan.max_deviation
        );
        for r in scan.rows.iter().step_by(4) {
            println!("    x = {:>5}  deviation {:.6e}", r.x, r.deviation);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fraczeta::Result<()> {
    run_example()
}
