//! The implicit eigenvalue equation on balls and its solver.

use crate::{BallError, Result};
use specfun::{bessel_j, bessel_jn, find_root, Bracket};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// A ball eigenvalue query: dimension N in {2, 3}, Robin parameter beta > 0
/// and radius r > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallQuery {
    pub dim: u32,
    pub beta: f64,
    pub radius: f64,
}

impl BallQuery {
    pub fn new(dim: u32, beta: f64, radius: f64) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(BallError::InvalidQuery(format!(
                "dimension must be 2 or 3, got {dim}"
            )));
        }
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(BallError::InvalidQuery(format!(
                "beta must be a positive finite real, got {beta}"
            )));
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(BallError::InvalidQuery(format!(
                "radius must be a positive finite real, got {radius}"
            )));
        }
        Ok(Self { dim, beta, radius })
    }
}

/// Solved first eigenvalue with the residual of the implicit equation.
#[derive(Debug, Clone, Copy)]
pub struct BallSolution {
    pub lambda: f64,
    pub sqrt_lambda: f64,
    /// |G(r, lambda)| at the returned eigenvalue.
    pub residual: f64,
}

/// |B_r| in dimension N.
pub fn ball_volume(dim: u32, r: f64) -> f64 {
    match dim {
        2 => PI * r * r,
        3 => 4.0 / 3.0 * PI * r * r * r,
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// Surface measure of the sphere of radius r in dimension N.
pub fn sphere_area(dim: u32, r: f64) -> f64 {
    match dim {
        2 => 2.0 * PI * r,
        3 => 4.0 * PI * r * r,
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// (J_{N/2}(x), J_{N/2-1}(x)) for N in {2, 3}.
pub(crate) fn bessel_pair(dim: u32, x: f64) -> (f64, f64) {
    match dim {
        2 => (bessel_jn(1, x), bessel_jn(0, x)),
        3 => (
            bessel_j(1.5, x).expect("supported order, x >= 0"),
            bessel_j(0.5, x).expect("supported order, x >= 0"),
        ),
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// G(r, lambda) = sqrt(lambda) J_{N/2}(sqrt(lambda) r) - beta J_{N/2-1}(sqrt(lambda) r).
///
/// The Bessel argument sqrt(lambda) * r is computed with a compensated
/// square root and product, and the pair is corrected to first order in the
/// rounding error. Without this the two rounding steps feeding the argument
/// put a noise floor of order beta * 1e-16 on the computable residual, which
/// breaks the 1e-10 budget once beta reaches 1e6.
pub(crate) fn implicit_equation(dim: u32, beta: f64, r: f64, lambda: f64) -> f64 {
    let s = lambda.sqrt();
    // lambda - s^2 to full precision, then the sqrt correction term.
    let e_s = f64::mul_add(-s, s, lambda) / (2.0 * s);
    let x = s * r;
    let e_x = f64::mul_add(s, r, -x) + e_s * r;
    let (j_num, j_den) = bessel_pair_taylor(dim, x, e_x);
    (s + e_s) * j_num - beta * j_den
}

/// (J_{N/2}, J_{N/2-1}) at x + dx for small dx, via J_v' = J_{v-1} - (v/x) J_v.
fn bessel_pair_taylor(dim: u32, x: f64, dx: f64) -> (f64, f64) {
    let (j_num, j_den) = bessel_pair(dim, x);
    if dx == 0.0 || x == 0.0 {
        return (j_num, j_den);
    }
    match dim {
        2 => (
            j_num + (j_den - j_num / x) * dx,
            j_den - j_num * dx,
        ),
        3 => {
            // J_{-1/2}(x) = sqrt(2/(pi x)) cos x.
            let j_minus_half = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.cos();
            (
                j_num + (j_den - 1.5 * j_num / x) * dx,
                j_den + (j_minus_half - 0.5 * j_den / x) * dx,
            )
        }
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// First positive zero of J_{N/2-1}: the Dirichlet threshold for the unit
/// ball (as a value of sqrt(lambda)).
pub fn dirichlet_threshold(dim: u32) -> f64 {
    match dim {
        2 => {
            static J01: OnceLock<f64> = OnceLock::new();
            *J01.get_or_init(|| {
                let f = |x: f64| bessel_jn(0, x);
                let b = Bracket::around(f, 2.0, 3.0).expect("J0 changes sign on [2, 3]");
                find_root(f, b, 0.0).expect("J0 is finite on [2, 3]")
            })
        }
        3 => PI,
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// Smallest positive root in lambda of G(r, lambda) = 0.
///
/// The root is bracketed between 0+ and the first Dirichlet eigenvalue of the
/// ball and refined to floating-point resolution; the recorded residual is
/// |G| at the returned eigenvalue.
pub fn robin_eigenvalue_ball(q: &BallQuery) -> Result<BallSolution> {
    let BallQuery { dim, beta, radius } = *q;
    BallQuery::new(dim, beta, radius)?;
    let lambda_dirichlet = (dirichlet_threshold(dim) / radius).powi(2);
    let g = |lambda: f64| implicit_equation(dim, beta, radius, lambda);

    // G -> -beta * J_{N/2-1}(0+) < 0 as lambda -> 0+, and G > 0 just below
    // the Dirichlet threshold; widen defensively if either sign check fails.
    let mut lo = lambda_dirichlet * 1e-18;
    let mut f_lo = g(lo);
    let mut tries = 0;
    while !(f_lo < 0.0) && tries < 8 {
        lo *= 1e-6;
        f_lo = g(lo);
        tries += 1;
    }
    let mut hi = lambda_dirichlet * (1.0 - 1e-12);
    let mut f_hi = g(hi);
    tries = 0;
    while !(f_hi > 0.0) && tries < 4 {
        hi = lambda_dirichlet * (1.0 - 1e-15 * 10f64.powi(tries));
        f_hi = g(hi);
        tries += 1;
    }
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(BallError::Bracketing { dim, beta, radius });
    }

    let bracket = Bracket::new(lo, hi, f_lo, f_hi)?;
    let lambda = find_root(g, bracket, 0.0)?;
    let residual = g(lambda).abs();
    if residual > 1e-10 {
        return Err(BallError::ResidualTooLarge { residual });
    }
    Ok(BallSolution {
        lambda,
        sqrt_lambda: lambda.sqrt(),
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda(dim: u32, beta: f64, r: f64) -> f64 {
        robin_eigenvalue_ball(&BallQuery::new(dim, beta, r).unwrap())
            .unwrap()
            .lambda
    }

    #[test]
    fn neumann_limit_is_perimeter_over_area() {
        // Constant test function: lambda / beta -> P/|B| = 2/r as beta -> 0.
        let l = lambda(2, 1e-6, 1.0);
        assert!((l / 1e-6 - 2.0).abs() < 0.01 * 2.0);
        let l3 = lambda(3, 1e-6, 1.0);
        assert!((l3 / 1e-6 - 3.0).abs() < 0.01 * 3.0);
    }

    #[test]
    fn unit_disc_beta_one_against_scan_oracle() {
        // Independent oracle: dense scan over (0, j01^2) followed by plain
        // bisection on G, no secant acceleration.
        let g = |lambda: f64| implicit_equation(2, 1.0, 1.0, lambda);
        let top = dirichlet_threshold(2).powi(2);
        let n = 4000;
        let mut lo = f64::NAN;
        for i in 1..n {
            let a = top * i as f64 / n as f64;
            let b = top * (i + 1) as f64 / n as f64;
            if g(a) < 0.0 && g(b) >= 0.0 {
                lo = a;
                break;
            }
        }
        let mut a = lo;
        let mut b = lo + top / n as f64;
        for _ in 0..80 {
            let m = 0.5 * (a + b);
            if g(m) < 0.0 {
                a = m;
            } else {
                b = m;
            }
        }
        let oracle = 0.5 * (a + b);
        let l = lambda(2, 1.0, 1.0);
        assert!((l - oracle).abs() < 1e-9, "impl {l} vs oracle {oracle}");
        assert!((l - 1.578).abs() < 2e-3);
        // x* solving x J1(x) = J0(x) is about 1.256.
        assert!((l.sqrt() - 1.256).abs() < 2e-3);
    }

    #[test]
    fn dirichlet_limit_at_large_beta() {
        let l = lambda(2, 1e6, 1.0);
        let j01sq = dirichlet_threshold(2).powi(2);
        assert!((j01sq - 5.7832).abs() < 1e-4);
        assert!((l - j01sq).abs() < 1e-2);
        assert!(l < j01sq);
    }

    #[test]
    fn three_dimensional_unit_ball_beta_one_is_quarter_pi_squared() {
        // For N=3, beta=1, r=1 the equation reduces to cos(sqrt(lambda)) = 0.
        let l = lambda(3, 1.0, 1.0);
        assert!((l - PI * PI / 4.0).abs() < 1e-10);
    }

    #[test]
    fn residuals_stay_within_budget() {
        for &dim in &[2, 3] {
            for &beta in &[1e-6, 0.5, 1.0, 5.0, 1e3, 1e6] {
                for &r in &[0.1, 0.5, 1.0, 2.0, 5.0] {
                    let sol =
                        robin_eigenvalue_ball(&BallQuery::new(dim, beta, r).unwrap()).unwrap();
                    assert!(sol.residual <= 1e-10);
                    assert!(sol.lambda > 0.0);
                    assert!(sol.lambda < (dirichlet_threshold(dim) / r).powi(2));
                }
            }
        }
    }

    #[test]
    fn scaling_identity() {
        // lambda_{beta}(B_r) = (1/r^2) lambda_{beta*r}(B_1).
        for &dim in &[2, 3] {
            for &beta in &[0.5, 1.0, 5.0] {
                for &r in &[0.25, 0.5, 2.0, 4.0] {
                    let direct = lambda(dim, beta, r);
                    let scaled = lambda(dim, beta * r, 1.0) / (r * r);
                    assert!(
                        (direct - scaled).abs() <= 1e-9 * direct,
                        "dim={dim} beta={beta} r={r}: {direct} vs {scaled}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_radius_reaches_n_beta() {
        let l = lambda(2, 1.0, 1e-3);
        assert!((1e-3 * l - 2.0).abs() < 1e-2);
    }

    #[test]
    fn invalid_queries_are_rejected() {
        assert!(BallQuery::new(4, 1.0, 1.0).is_err());
        assert!(BallQuery::new(2, 0.0, 1.0).is_err());
        assert!(BallQuery::new(2, 1.0, -1.0).is_err());
    }
}
