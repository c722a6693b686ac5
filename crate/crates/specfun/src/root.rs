//! Bracketed scalar root finding: secant steps accelerated inside a bracket
//! that is never abandoned, with bisection forced whenever progress stalls.

use crate::{Result, SpecFunError};

/// A sign-changing interval. `f_lo` and `f_hi` always have strictly opposite
/// signs and `lo < hi`.
#[derive(Debug, Clone, Copy)]
pub struct Bracket {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(SpecFunError::Domain(format!(
                "bracket endpoints must be finite with lo < hi, got [{lo}, {hi}]"
            )));
        }
        if !f_lo.is_finite() || !f_hi.is_finite() {
            return Err(SpecFunError::NonFinite(if f_lo.is_finite() { hi } else { lo }));
        }
        if f_lo == 0.0 || f_hi == 0.0 || f_lo.signum() == f_hi.signum() {
            return Err(SpecFunError::InvalidBracket { lo, hi, f_lo, f_hi });
        }
        Ok(Self { lo, hi, f_lo, f_hi })
    }

    /// Evaluates `f` at both endpoints and validates the sign change.
    pub fn around(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64) -> Result<Self> {
        let f_lo = f(lo);
        let f_hi = f(hi);
        Self::new(lo, hi, f_lo, f_hi)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

const MAX_ITER: usize = 600;

/// Finds a root of `f` inside `bracket`.
///
/// The bracket is shrunk until its width is at most `tol` (a tolerance of 0
/// runs down to adjacent floating-point numbers). Secant steps are taken when
/// they fall inside the bracket; a bisection step is forced whenever the last
/// step failed to halve the width, so convergence is guaranteed for any
/// continuous sign-changing function. Returns the endpoint with the smaller
/// residual.
pub fn find_root(mut f: impl FnMut(f64) -> f64, bracket: Bracket, tol: f64) -> Result<f64> {
    if !(tol >= 0.0) {
        return Err(SpecFunError::Domain(format!("tol must be >= 0, got {tol}")));
    }
    let (mut a, mut fa, mut b, mut fb) = (bracket.lo, bracket.f_lo, bracket.hi, bracket.f_hi);
    let mut force_bisect = false;
    for _ in 0..MAX_ITER {
        let width = b - a;
        if width <= tol {
            break;
        }
        let mut x = if force_bisect {
            0.5 * (a + b)
        } else {
            b - fb * (b - a) / (fb - fa)
        };
        if !x.is_finite() || x <= a || x >= b {
            x = 0.5 * (a + b);
        }
        if x <= a || x >= b {
            // No representable point strictly inside; resolution exhausted.
            break;
        }
        let fx = f(x);
        if !fx.is_finite() {
            return Err(SpecFunError::NonFinite(x));
        }
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        force_bisect = (b - a) > 0.5 * width;
    }
    Ok(if fa.abs() <= fb.abs() { a } else { b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, SQRT_2};

    #[test]
    fn sqrt_two() {
        let f = |x: f64| x * x - 2.0;
        let b = Bracket::around(f, 1.0, 2.0).unwrap();
        let x = find_root(f, b, 1e-12).unwrap();
        assert!((x - SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn first_zero_of_j0() {
        let f = |x: f64| crate::bessel_jn(0, x);
        let b = Bracket::around(f, 2.0, 3.0).unwrap();
        let x = find_root(f, b, 1e-13).unwrap();
        assert!((x - 2.404_825_557_695_773).abs() < 1e-12);
    }

    #[test]
    fn cosine_root_is_half_pi() {
        let f = |x: f64| x.cos();
        let b = Bracket::around(f, 1.0, 2.0).unwrap();
        let x = find_root(f, b, 1e-14).unwrap();
        assert!((x - FRAC_PI_2).abs() < 1e-13);
    }

    #[test]
    fn zero_tolerance_runs_to_float_resolution() {
        let f = |x: f64| x * x - 2.0;
        let b = Bracket::around(f, 1.0, 2.0).unwrap();
        let x = find_root(f, b, 0.0).unwrap();
        assert!((x - SQRT_2).abs() <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn same_sign_bracket_is_rejected() {
        let f = |x: f64| x * x + 1.0;
        assert!(matches!(
            Bracket::around(f, -1.0, 1.0),
            Err(SpecFunError::InvalidBracket { .. })
        ));
    }

    #[test]
    fn non_finite_evaluation_is_an_error() {
        let f = |x: f64| if x > 1.4 && x < 1.5 { f64::NAN } else { x * x - 2.0 };
        let b = Bracket::around(f, 1.0, 2.0).unwrap();
        assert!(matches!(
            find_root(f, b, 1e-12),
            Err(SpecFunError::NonFinite(_))
        ));
    }

    #[test]
    fn steep_function_converges() {
        // Mimics the eigenvalue equation at very large Robin parameter.
        let beta = 1e6;
        let f = |x: f64| x.sin() - beta * x.cos();
        let b = Bracket::around(f, 1.0, 3.0).unwrap();
        let x = find_root(f, b, 0.0).unwrap();
        assert!((x.tan() - beta).abs() / beta < 1e-9);
    }
}
