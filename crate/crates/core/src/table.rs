//! Grid sweeps and their CSV / JSON serialisation.
//!
//! Rows come out in lexicographic `(re_s, im_s, x)` order regardless of how
//! the points were evaluated. A point that fails is recorded with a status
//! and empty value columns; it never aborts the sweep.
//!
//! CSV columns are `re_s,im_s,x,re_val,im_val,err_est,n_evals,status`, with
//! every real printed as `{:.16e}` (17 significant digits, enough to
//! round-trip any `f64` exactly) and LF line endings.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::complexfn::ComplexScalar;
use crate::error::{Error, Result};
use crate::fractional::{
    eta_incomplete, frac_integral, zeta_incomplete, Estimate, EtaCoordinatePoint,
    FracCoordinatePoint,
};
use crate::quadrature::EvalConfig;

/// Which function a sweep or point evaluation computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// `η(s, x)`, `x ≥ 0`.
    Eta,
    /// `ζ(s, x)`, `x ≥ 0`.
    Zeta,
    /// `(₋∞I_x^s f)(x)`, `x ≤ 0`.
    Frac,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eta" => Ok(Mode::Eta),
            "zeta" => Ok(Mode::Zeta),
            "frac" => Ok(Mode::Frac),
            other => Err(Error::Usage(format!(
                "unknown mode '{other}' (expected eta, zeta or frac)"
            ))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Eta => "eta",
            Mode::Zeta => "zeta",
            Mode::Frac => "frac",
        })
    }
}

/// Evaluates one point in the given mode.
pub fn evaluate(mode: Mode, s: ComplexScalar, x: f64, cfg: &EvalConfig) -> Result<Estimate> {
    match mode {
        Mode::Eta => eta_incomplete(EtaCoordinatePoint::new(s, x)?, cfg),
        Mode::Zeta => zeta_incomplete(EtaCoordinatePoint::new(s, x)?, cfg),
        Mode::Frac => frac_integral(FracCoordinatePoint::new(s, x)?, cfg),
    }
}

/// An inclusive arithmetic progression `start, start + step, …, ≤ stop`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Axis {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite())
            || step <= 0.0
            || start > stop
        {
            return Err(Error::Usage(format!(
                "grid axis needs finite start ≤ stop and step > 0, got {start}:{stop}:{step}"
            )));
        }
        Ok(Self { start, stop, step })
    }

    /// A single-value axis.
    pub fn point(value: f64) -> Result<Self> {
        Self::new(value, value, 1.0)
    }

    pub fn values(&self) -> Vec<f64> {
        // Tolerate rounding in (stop - start)/step so that 0:1:0.1 ends at 1.
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=n).map(|k| self.start + k as f64 * self.step).collect()
    }
}

/// Parses `start:stop:step`, or a single number for a one-point axis.
impl FromStr for Axis {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').map(str::trim).collect();
        let num = |p: &str| {
            p.parse::<f64>()
                .map_err(|_| Error::Usage(format!("cannot parse '{p}' in grid axis '{text}'")))
        };
        match parts.as_slice() {
            [v] => Axis::point(num(v)?),
            [a, b, h] => Axis::new(num(a)?, num(b)?, num(h)?),
            _ => Err(Error::Usage(format!(
                "grid axis '{text}' must be 'start:stop:step' or a number"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub re_s: Axis,
    pub im_s: Axis,
    pub x: Axis,
}

impl GridSpec {
    /// All `(s, x)` points in lexicographic `(re_s, im_s, x)` order.
    pub fn points(&self) -> Vec<(ComplexScalar, f64)> {
        let (xs, ims) = (self.x.values(), self.im_s.values());
        let mut out = Vec::new();
        for re in self.re_s.values() {
            for &im in &ims {
                for &x in &xs {
                    out.push((Complex64::new(re, im), x));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Ok,
    Pole,
    Domain,
    Nonconvergence,
    Error,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::Pole => "pole",
            RowStatus::Domain => "domain",
            RowStatus::Nonconvergence => "nonconvergence",
            RowStatus::Error => "error",
        }
    }

    fn of(err: &Error) -> Self {
        match err {
            Error::Pole { .. } => RowStatus::Pole,
            Error::Domain(_) => RowStatus::Domain,
            Error::NonConvergence { .. } => RowStatus::Nonconvergence,
            _ => RowStatus::Error,
        }
    }
}

/// One row of a sweep; the value columns are `None` unless `status` is ok.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub re_s: f64,
    pub im_s: f64,
    pub x: f64,
    pub re_val: Option<f64>,
    pub im_val: Option<f64>,
    pub err_est: Option<f64>,
    pub n_evals: Option<usize>,
    pub status: RowStatus,
}

impl TableRow {
    pub fn from_result(s: ComplexScalar, x: f64, result: &Result<Estimate>) -> Self {
        let mut row = TableRow {
            re_s: s.re,
            im_s: s.im,
            x,
            re_val: None,
            im_val: None,
            err_est: None,
            n_evals: None,
            status: RowStatus::Ok,
        };
        match result {
            Ok(e) => {
                row.re_val = Some(e.value.re);
                row.im_val = Some(e.value.im);
                row.err_est = Some(e.err_estimate);
                row.n_evals = Some(e.n_evals);
            }
            Err(err) => row.status = RowStatus::of(err),
        }
        row
    }
}

/// Evaluates every grid point, in parallel, returning rows in grid order.
pub fn sweep(grid: &GridSpec, mode: Mode, cfg: &EvalConfig) -> Vec<TableRow> {
    grid.points()
        .par_iter()
        .map(|&(s, x)| TableRow::from_result(s, x, &evaluate(mode, s, x, cfg)))
        .collect()
}

pub const CSV_HEADER: [&str; 8] = [
    "re_s", "im_s", "x", "re_val", "im_val", "err_est", "n_evals", "status",
];

/// Fixed 17-significant-digit formatting used for every real CSV column.
pub fn format_real(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(rows: &[TableRow], out: W) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    let opt = |v: Option<f64>| v.map(format_real).unwrap_or_default();
    for r in rows {
        w.write_record([
            format_real(r.re_s),
            format_real(r.im_s),
            format_real(r.x),
            opt(r.re_val),
            opt(r.im_val),
            opt(r.err_est),
            r.n_evals.map(|n| n.to_string()).unwrap_or_default(),
            r.status.as_str().to_string(),
        ])?;
    }
    w.flush()
}

pub fn write_json<W: Write>(rows: &[TableRow], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    out.write_all(b"\n")
}
