// Sweeps ζ(s, x) over a small grid and writes it as CSV, the same format
// `fraczeta table` produces. The row at s = 1 is a pole and keeps empty value
// columns.
//
// ```text
// cargo run --example incomplete_zeta_table > zeta.csv
// ```

use fraczeta::quadrature::EvalConfig;
use fraczeta::table::{sweep, write_csv, GridSpec, Mode};

pub fn run_example() -> fraczeta::Result<()> {
    let grid = GridSpec {
        re_s: "0.5:2:0.5".parse()?,
        im_s: "0:5:5".parse()?,
        x: "0:1:0.5".parse()?,
    };
    let rows = sweep(&grid, Mode::Zeta, &EvalConfig::default());
    write_csv(&rows, std::io::stdout().lock())
        .map_err(|e| fraczeta::Error::Usage(e.to_string()))?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> fraczeta::Result<()> {
    run_example()
}
