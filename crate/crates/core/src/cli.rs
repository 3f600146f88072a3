//! The `fraczeta` command line.
//!
//! [`run`] takes the argument list and two writers and returns the process
//! exit code, so the binary is a one-liner and every command can be driven
//! from tests.
//!
//! | code | meaning                                        |
//! |------|------------------------------------------------|
//! | 0    | success, or every verification check passed    |
//! | 1    | at least one verification check failed         |
//! | 2    | usage, domain or pole error                    |
//! | 3    | numerical failure (non-convergence and kin)    |
//! | 4    | I/O error                                      |

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::checks::{self, CheckReport, CheckStatus};
use crate::complexfn::{ComplexScalar, DEFAULT_POLE_TOLERANCE};
use crate::error::{format_complex, Error};
use crate::quadrature::EvalConfig;
use crate::scan::{symmetry_scan, zero_scan};
use crate::table::{self, Axis, GridSpec, Mode, TableRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_IO: i32 = 4;

const COMPLEX_HELP: &str =
    "complex number written a+bi or a-bi (spaces allowed), e.g. 0.5+14.13i, 2, -3i";

#[derive(Parser, Debug)]
#[command(
    name = "fraczeta",
    version,
    about = "Incomplete eta and zeta functions as improper Riemann-Liouville fractional integrals",
    after_help = "Complex arguments use the syntax a+bi / a-bi, e.g. --s 0.5+14.134725i or --s \"2 - 3i\".",
    allow_negative_numbers = true
)]
struct Cli {
    #[command(flatten)]
    tol: TolArgs,

    /// Write data output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Data format for eval, table, zero-scan and symmetry-scan.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct TolArgs {
    /// Absolute error tolerance.
    #[arg(long, global = true, default_value_t = EvalConfig::default().abs_tol)]
    abs_tol: f64,
    /// Relative error tolerance.
    #[arg(long, global = true, default_value_t = EvalConfig::default().rel_tol)]
    rel_tol: f64,
    /// Maximum tanh-sinh refinement level (1..=12).
    #[arg(long, global = true, default_value_t = EvalConfig::default().max_level)]
    max_level: u32,
    /// Distance from a zero of 2^s - 2 treated as a pole.
    #[arg(long, global = true, default_value_t = DEFAULT_POLE_TOLERANCE)]
    pole_tol: f64,
}

impl TolArgs {
    fn config(&self) -> EvalConfig {
        EvalConfig {
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            max_level: self.max_level,
            pole_tolerance: self.pole_tol,
            ..EvalConfig::default()
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// η(s, x) on x ≥ 0
    Eta,
    /// ζ(s, x) on x ≥ 0
    Zeta,
    /// fractional integral of 1/(e^{-t}+1) on x ≤ 0
    Frac,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Eta => Mode::Eta,
            ModeArg::Zeta => Mode::Zeta,
            ModeArg::Frac => Mode::Frac,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Semigroup,
    Derivative,
    Norm,
    Bound,
    Oracle,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one point.
    Eval {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, help = COMPLEX_HELP, value_parser = parse_complex, allow_hyphen_values = true)]
        s: ComplexScalar,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Sweep a grid of (s, x) points into CSV or JSON.
    Table {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Real part of s as start:stop:step or a single number.
        #[arg(long = "re", allow_hyphen_values = true)]
        re_s: Axis,
        /// Imaginary part of s as start:stop:step or a single number.
        #[arg(long = "im", default_value = "0", allow_hyphen_values = true)]
        im_s: Axis,
        /// x as start:stop:step or a single number.
        #[arg(long, allow_hyphen_values = true)]
        x: Axis,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Replace the suite grid by a single order (oracle, bound, derivative).
        #[arg(long, help = COMPLEX_HELP, value_parser = parse_complex, allow_hyphen_values = true, requires = "x")]
        s: Option<ComplexScalar>,
        /// Point for --s.
        #[arg(long, allow_hyphen_values = true, requires = "s")]
        x: Option<f64>,
    },
    /// Locate local minima of |ζ(1/2 + it)| on [t-min, t-max].
    ZeroScan {
        #[arg(long, allow_hyphen_values = true)]
        t_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        t_max: f64,
        #[arg(long)]
        step: f64,
    },
    /// Compare ζ(s1, x) with ζ(s2, x) over a grid of x ≤ 0.
    SymmetryScan {
        #[arg(long, help = COMPLEX_HELP, value_parser = parse_complex, allow_hyphen_values = true)]
        s1: ComplexScalar,
        #[arg(long, help = COMPLEX_HELP, value_parser = parse_complex, allow_hyphen_values = true)]
        s2: ComplexScalar,
        /// Comma-separated x values or start:stop:step.
        #[arg(long, default_value = "0,-1,-2", allow_hyphen_values = true, value_parser = parse_x_grid)]
        x: XGrid,
    },
}

#[derive(Clone, Debug)]
struct XGrid(Vec<f64>);

fn parse_x_grid(text: &str) -> Result<XGrid, String> {
    if text.contains(':') {
        return text
            .parse::<Axis>()
            .map(|a| XGrid(a.values()))
            .map_err(|e| e.to_string());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| format!("cannot parse '{p}' as a number"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(XGrid)
}

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i` with optional whitespace.
pub fn parse_complex(text: &str) -> Result<ComplexScalar, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse '{text}' as a complex number (expected a+bi)");
    if compact.is_empty() {
        return Err(bad());
    }
    let num = |p: &str| p.parse::<f64>().map_err(|_| bad());
    let imag = |p: &str| match p {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        p => num(p),
    };
    let z = match compact.strip_suffix('i') {
        None => Complex64::new(num(&compact)?, 0.0),
        Some(body) => {
            // The sign separating the parts is the last + or - not starting
            // the string and not belonging to an exponent.
            let bytes = body.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
            match split {
                Some(k) => Complex64::new(num(&body[..k])?, imag(&body[k..])?),
                None => Complex64::new(0.0, imag(body)?),
            }
        }
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::Pole { .. } | Error::Usage(_) => EXIT_USAGE,
        Error::NonConvergence { .. }
        | Error::Overflow(_)
        | Error::EnvelopeViolation { .. }
        | Error::StepTooLarge { .. }
        | Error::ToleranceUnreachable { .. } => EXIT_NUMERICAL,
    }
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "I/O error: {e}");
            EXIT_IO
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = cli.tol.config();
    cfg.validate()?;
    match &cli.command {
        Command::Eval { mode, s, x } => {
            let result = table::evaluate((*mode).into(), *s, *x, &cfg);
            match cli.format {
                None => {
                    let e = result?;
                    writeln!(out, "value        = {}", format_complex(&e.value))?;
                    writeln!(out, "err_estimate = {:e}", e.err_estimate)?;
                    writeln!(out, "n_evals      = {}", e.n_evals)?;
                }
                Some(format) => {
                    let row = TableRow::from_result(*s, *x, &result);
                    result?;
                    emit_rows(cli, format, &[row], out)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Table {
            mode,
            re_s,
            im_s,
            x,
        } => {
            let grid = GridSpec {
                re_s: *re_s,
                im_s: *im_s,
                x: *x,
            };
            let rows = table::sweep(&grid, (*mode).into(), &cfg);
            emit_rows(cli, cli.format.unwrap_or(Format::Csv), &rows, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, s, x } => verify(*suite, s.zip(*x), &cfg, out),
        Command::ZeroScan { t_min, t_max, step } => {
            let minima = zero_scan(*t_min, *t_max, *step, &cfg)?;
            with_output(cli, out, |w| match cli.format {
                Some(Format::Json) => {
                    let items: Vec<_> = minima
                        .iter()
                        .map(|m| serde_json::json!({ "t": m.t, "abs_zeta": m.abs_zeta }))
                        .collect();
                    serde_json::to_writer_pretty(&mut *w, &items)?;
                    writeln!(w)
                }
                _ => {
                    writeln!(w, "t,abs_zeta")?;
                    for m in &minima {
                        writeln!(
                            w,
                            "{},{}",
                            table::format_real(m.t),
                            table::format_real(m.abs_zeta)
                        )?;
                    }
                    Ok(())
                }
            })?;
            Ok(EXIT_OK)
        }
        Command::SymmetryScan { s1, s2, x } => {
            let scan = symmetry_scan(*s1, *s2, &x.0, &cfg)?;
            with_output(cli, out, |w| match cli.format {
                Some(Format::Json) => {
                    let rows: Vec<_> = scan
                        .rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "x": r.x,
                                "re_zeta1": r.zeta1.re, "im_zeta1": r.zeta1.im,
                                "re_zeta2": r.zeta2.re, "im_zeta2": r.zeta2.im,
                                "deviation": r.deviation, "err_est": r.err_estimate,
                            })
                        })
                        .collect();
                    let doc =
                        serde_json::json!({ "rows": rows, "max_deviation": scan.max_deviation });
                    serde_json::to_writer_pretty(&mut *w, &doc)?;
                    writeln!(w)
                }
                _ => {
                    writeln!(w, "x,re_zeta1,im_zeta1,re_zeta2,im_zeta2,deviation,err_est")?;
                    for r in &scan.rows {
                        let cols = [
                            r.x,
                            r.zeta1.re,
                            r.zeta1.im,
                            r.zeta2.re,
                            r.zeta2.im,
                            r.deviation,
                            r.err_estimate,
                        ];
                        let line: Vec<String> =
                            cols.iter().map(|&v| table::format_real(v)).collect();
                        writeln!(w, "{}", line.join(","))?;
                    }
                    writeln!(
                        w,
                        "# max deviation {}",
                        table::format_real(scan.max_deviation)
                    )
                }
            })?;
            Ok(EXIT_OK)
        }
    }
}

fn emit_rows(
    cli: &Cli,
    format: Format,
    rows: &[TableRow],
    out: &mut dyn Write,
) -> Result<(), Failure> {
    with_output(cli, out, |w| match format {
        Format::Csv => table::write_csv(rows, w),
        Format::Json => table::write_json(rows, w),
    })
}

/// Sends data to `--out` when given, otherwise to `out`.
fn with_output<F>(cli: &Cli, out: &mut dyn Write, write: F) -> Result<(), Failure>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match &cli.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write(&mut file)?;
            file.flush()?;
        }
        None => write(out)?,
    }
    Ok(())
}

fn verify(
    suite: Suite,
    point: Option<(ComplexScalar, f64)>,
    cfg: &EvalConfig,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let points = point.map(|p| vec![p]);
    let points = points.as_deref();
    if points.is_some() && matches!(suite, Suite::Semigroup | Suite::Norm | Suite::All) {
        return Err(Error::Usage(
            "--s/--x apply only to the oracle, bound and derivative suites".into(),
        )
        .into());
    }
    let mut reports = Vec::new();
    if matches!(suite, Suite::Norm | Suite::All) {
        reports.extend(checks::norm_suite(cfg));
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        reports.extend(checks::oracle_suite(points, cfg));
    }
    if matches!(suite, Suite::Bound | Suite::All) {
        reports.extend(checks::bound_suite(points, cfg));
    }
    if matches!(suite, Suite::Semigroup | Suite::All) {
        reports.extend(checks::semigroup_suite(None, cfg));
    }
    if matches!(suite, Suite::Derivative | Suite::All) {
        reports.extend(checks::derivative_suite(points, cfg));
    }
    write_reports(&reports, out)?;
    let all_passed = reports.iter().all(|r| r.passed);
    Ok(if all_passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn write_reports(reports: &[CheckReport], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "fraczeta {} verification", env!("CARGO_PKG_VERSION"))?;
    writeln!(
        out,
        "{:<28} {:>14} {:>6} {:>12} {:>10}  status",
        "check", "s", "x", "residual", "tolerance"
    )?;
    for r in reports {
        writeln!(
            out,
            "{:<28} {:>14} {:>6} {:>12.3e} {:>10.1e}  {}",
            r.check_name,
            format_complex(&r.s),
            r.x,
            r.residual,
            r.tolerance,
            r.status
        )?;
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let skipped = reports
        .iter()
        .filter(|r| matches!(r.status, CheckStatus::Skipped(_)))
        .count();
    writeln!(
        out,
        "{} checks, {} failed, {} skipped",
        reports.len(),
        failed,
        skipped
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["fraczeta"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn complex_syntax() {
        let c = Complex64::new;
        let cases = [
            ("2", c(2.0, 0.0)),
            ("0.5+14.13i", c(0.5, 14.13)),
            ("0.5 - 14.13i", c(0.5, -14.13)),
            ("-1e-3+2E+1i", c(-1e-3, 20.0)),
            ("3i", c(0.0, 3.0)),
            ("-i", c(0.0, -1.0)),
            ("1+i", c(1.0, 1.0)),
            (" 2.5e2 ", c(250.0, 0.0)),
        ];
        for (text, z) in cases {
            assert_eq!(parse_complex(text).unwrap(), z, "{text}");
        }
        for bad in ["", "i2", "1+2j", "1++2i", "nan", "abc"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn eval_zeta_two() {
        let (code, out, _) = run_capture(&["eval", "--mode", "zeta", "--s", "2", "--x", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("1.64493406684"), "{out}");
    }

    #[test]
    fn eval_pole_exits_two() {
        let (code, _, err) = run_capture(&["eval", "--mode", "zeta", "--s", "1", "--x", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("prefactor pole at s = 1"), "{err}");
    }

    #[test]
    fn eval_frac_negative_x() {
        let (code, out, _) = run_capture(&["eval", "--mode", "frac", "--s", "1", "--x", "-1"]);
        assert_eq!(code, 0);
        assert!(out.contains("0.3132616875"), "{out}");
    }

    #[test]
    fn nonconvergence_exits_three() {
        let (code, _, err) = run_capture(&[
            "--max-level",
            "1",
            "eval",
            "--mode",
            "eta",
            "--s",
            "0.3+5i",
            "--x",
            "0",
        ]);
        assert_eq!(code, 3, "{err}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(
            run_capture(&[
                "zero-scan",
                "--t-min",
                "14",
                "--t-max",
                "14",
                "--step",
                "0.01"
            ])
            .0,
            2
        );
        assert_eq!(
            run_capture(&["eval", "--mode", "eta", "--s", "zz", "--x", "0"]).0,
            2
        );
        assert_eq!(run_capture(&["--abs-tol", "0", "verify", "norm"]).0, 2);
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("a+bi"));
    }

    #[test]
    fn verify_norm_passes() {
        let (code, out, _) = run_capture(&["verify", "norm"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("1 checks, 0 failed"));
    }

    #[test]
    fn verify_derivative_skips_pole() {
        let (code, out, _) = run_capture(&["verify", "derivative", "--s", "1", "--x", "-1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("skipped (pole)"), "{out}");
    }

    #[test]
    fn verify_failure_exits_one() {
        let (code, out, _) = run_capture(&["verify", "oracle", "--s", "-1", "--x", "0"]);
        assert_eq!(code, 1, "{out}");
    }

    #[test]
    fn unwritable_output_exits_four() {
        let (code, _, err) = run_capture(&[
            "--out",
            "/nonexistent-dir/x.csv",
            "table",
            "--mode",
            "eta",
            "--re",
            "2",
            "--x",
            "0",
        ]);
        assert_eq!(code, 4, "{err}");
    }

    #[test]
    fn exit_codes_cover_every_error() {
        assert_eq!(exit_code(&Error::Domain(String::new())), 2);
        assert_eq!(
            exit_code(&Error::Pole {
                s: Complex64::new(1.0, 0.0),
                denom_magnitude: 0.0
            }),
            2
        );
        assert_eq!(
            exit_code(&Error::NonConvergence {
                level: 1,
                err_estimate: 1.0,
                target: 0.0
            }),
            3
        );
    }
}
