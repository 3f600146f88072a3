//! Exploratory scans: local minima of `|ζ(1/2 + it)|` and pointwise
//! comparison of `ζ(s₁, x)` with `ζ(s₂, x)`.

use num_complex::Complex64;

use crate::complexfn::ComplexScalar;
use crate::error::{Error, Result};
use crate::fractional::{zeta_complete, zeta_frac, FracCoordinatePoint};
use crate::quadrature::EvalConfig;

/// Width of the final bracket in the golden-section refinement.
pub const ZERO_SCAN_T_TOL: f64 = 1e-10;

/// Golden-section search for a minimum of `f` on `[a, b]`, stopping once the
/// bracket is narrower than `tol`. Returns `(t_min, f(t_min))`.
pub fn golden_section_minimize<F>(f: F, mut a: f64, mut b: f64, tol: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    const RESP: f64 = 0.381_966_011_250_105_1; // 2 - φ

    let mut x1 = a + RESP * (b - a);
    let mut x2 = b - RESP * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while b - a > tol {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + RESP * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - RESP * (b - a);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 < f2 { (x1, f1) } else { (x2, f2) })
}

/// A refined local minimum of `|ζ(1/2 + it)|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalLineMinimum {
    pub t: f64,
    pub abs_zeta: f64,
}

/// Samples `|ζ(1/2 + it)|` on `t_min, t_min + step, …, t_max`, then refines
/// every interior local minimum of the samples by golden-section search
/// inside its two neighbouring cells.
pub fn zero_scan(
    t_min: f64,
    t_max: f64,
    step: f64,
    cfg: &EvalConfig,
) -> Result<Vec<CriticalLineMinimum>> {
    if !(t_min.is_finite() && t_max.is_finite() && step > 0.0 && step < t_max - t_min) {
        return Err(Error::Usage(format!(
            "zero scan needs 0 < step < t_max - t_min, got t_min = {t_min}, t_max = {t_max}, step = {step}"
        )));
    }
    let abs_zeta =
        |t: f64| -> Result<f64> { Ok(zeta_complete(Complex64::new(0.5, t), cfg)?.value.norm()) };

    let n = ((t_max - t_min) / step + 1e-9).floor() as usize;
    let grid: Vec<f64> = (0..=n).map(|k| t_min + k as f64 * step).collect();
    let values = grid
        .iter()
        .map(|&t| abs_zeta(t))
        .collect::<Result<Vec<_>>>()?;

    let mut minima = Vec::new();
    for k in 1..grid.len().saturating_sub(1) {
        if values[k] <= values[k - 1] && values[k] < values[k + 1] {
            let (t, abs_zeta) =
                golden_section_minimize(abs_zeta, grid[k - 1], grid[k + 1], ZERO_SCAN_T_TOL)?;
            minima.push(CriticalLineMinimum { t, abs_zeta });
        }
    }
    Ok(minima)
}

/// `ζ(s₁, x)` and `ζ(s₂, x)` at one point of a symmetry scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryRow {
    pub x: f64,
    pub zeta1: ComplexScalar,
    pub zeta2: ComplexScalar,
    /// `|ζ(s₁, x) - ζ(s₂, x)|`.
    pub deviation: f64,
    /// Sum of both error estimates.
    pub err_estimate: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryScan {
    pub rows: Vec<SymmetryRow>,
    pub max_deviation: f64,
}

/// Compares `ζ(s₁, x)` with `ζ(s₂, x)` on each `x ≤ 0` of `x_grid`.
pub fn symmetry_scan(
    s1: ComplexScalar,
    s2: ComplexScalar,
    x_grid: &[f64],
    cfg: &EvalConfig,
) -> Result<SymmetryScan> {
    let mut rows = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let z1 = zeta_frac(FracCoordinatePoint::new(s1, x)?, cfg)?;
        let z2 = zeta_frac(FracCoordinatePoint::new(s2, x)?, cfg)?;
        rows.push(SymmetryRow {
            x,
            zeta1: z1.value,
            zeta2: z2.value,
            deviation: (z1.value - z2.value).norm(),
            err_estimate: z1.err_estimate + z2.err_estimate,
        });
    }
    let max_deviation = rows.iter().map(|r| r.deviation).fold(0.0, f64::max);
    Ok(SymmetryScan {
        rows,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let (t, v) =
            golden_section_minimize(|t| Ok((t - 0.3) * (t - 0.3)), -1.0, 1.0, 1e-10).unwrap();
        assert!((t - 0.3).abs() < 1e-8);
        assert!(v < 1e-16);
    }

    #[test]
    fn golden_section_handles_kink() {
        let (t, _) = golden_section_minimize(|t| Ok((t - 1.25).abs()), 1.0, 2.0, 1e-12).unwrap();
        assert!((t - 1.25).abs() < 1e-11);
    }

    #[test]
    fn first_zero_is_found() {
        let minima = zero_scan(14.0, 14.3, 0.01, &cfg()).unwrap();
        assert_eq!(minima.len(), 1, "{minima:?}");
        assert!(
            (minima[0].t - 14.134725141734693).abs() < 1e-6,
            "{minima:?}"
        );
        assert!(minima[0].abs_zeta < 1e-6);
    }

    #[test]
    fn no_zero_between_two_and_three() {
        let minima = zero_scan(2.0, 3.0, 0.1, &cfg()).unwrap();
        assert!(minima.iter().all(|m| m.abs_zeta > 0.5), "{minima:?}");
    }

    #[test]
    fn degenerate_ranges_are_usage_errors() {
        for (a, b, h) in [
            (14.0, 14.0, 0.01),
            (14.0, 14.3, 0.0),
            (14.0, 14.3, 0.5),
            (3.0, 2.0, 0.1),
        ] {
            assert!(matches!(zero_scan(a, b, h, &cfg()), Err(Error::Usage(_))));
        }
    }

    #[test]
    fn identical_orders_agree() {
        let s = Complex64::new(2.0, 1.0);
        let scan = symmetry_scan(s, s, &[0.0, -1.0], &cfg()).unwrap();
        for r in &scan.rows {
            assert!(r.deviation <= 2.0 * r.err_estimate);
        }
    }

    #[test]
    fn conjugate_orders_flip_imaginary_parts() {
        let s = Complex64::new(1.5, 3.0);
        let scan = symmetry_scan(s, s.conj(), &[0.0, -0.5, -2.0], &cfg()).unwrap();
        for r in &scan.rows {
            assert!((r.zeta1.re - r.zeta2.re).abs() <= r.err_estimate);
            assert!((r.zeta1.im + r.zeta2.im).abs() <= r.err_estimate);
            assert!(r.zeta1.im != 0.0);
        }
    }

    #[test]
    fn different_orders_differ() {
        let scan = symmetry_scan(
            Complex64::new(2.0, 0.0),
            Complex64::new(3.0, 0.0),
            &[0.0, -1.0, -2.0],
            &cfg(),
        )
        .unwrap();
        assert!(scan.rows.iter().all(|r| r.deviation > r.err_estimate));
        assert!(scan.max_deviation > 0.0);
    }

    #[test]
    fn bad_grid_point_is_rejected() {
        assert!(symmetry_scan(
            Complex64::new(2.0, 0.0),
            Complex64::new(3.0, 0.0),
            &[0.5],
            &cfg()
        )
        .is_err());
    }
}
