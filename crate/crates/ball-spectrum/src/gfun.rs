//! The map g(r) = r * lambda(B_r), its closed-form derivative and the
//! analytic derivative of the eigenvalue itself.

use crate::eigen::{robin_eigenvalue_ball, BallQuery};
use crate::Result;
use crate::BallError;

/// Radii below this are answered with the continuous extension g(0) = N beta.
const G_LIMIT_RADIUS: f64 = 1e-8;

/// g(r) = r * lambda_{1,beta}(B_r), extended continuously by N*beta at r = 0.
pub fn g_value(q: &BallQuery) -> Result<f64> {
    BallQuery::new(q.dim, q.beta, q.radius)?;
    if q.radius < G_LIMIT_RADIUS {
        return Ok(q.dim as f64 * q.beta);
    }
    Ok(q.radius * robin_eigenvalue_ball(q)?.lambda)
}

/// Closed-form g'(r) = -(g/r) (1 - 2 beta / (g - (N-2) beta + beta^2 r)).
///
/// The denominator is positive whenever the eigenvalue solve is consistent; a
/// nonpositive value is reported as a numeric error.
pub fn g_prime_ode(q: &BallQuery) -> Result<f64> {
    let g = g_value(q)?;
    let n = q.dim as f64;
    let h = g - (n - 2.0) * q.beta + q.beta * q.beta * q.radius;
    if h <= 0.0 {
        return Err(BallError::NonPositiveDenominator(h));
    }
    Ok(-(g / q.radius) * (1.0 - 2.0 * q.beta / h))
}

/// d lambda / dr computed analytically as (g' r - g) / r^2.
pub fn lambda_prime(q: &BallQuery) -> Result<f64> {
    let g = g_value(q)?;
    let gp = g_prime_ode(q)?;
    Ok((gp * q.radius - g) / (q.radius * q.radius))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(dim: u32, beta: f64, r: f64) -> BallQuery {
        BallQuery::new(dim, beta, r).unwrap()
    }

    #[test]
    fn g_limit_at_origin() {
        assert_eq!(g_value(&q(2, 1.0, 1e-9)).unwrap(), 2.0);
        assert_eq!(g_value(&q(3, 2.5, 1e-9)).unwrap(), 7.5);
        // Approach from positive radii as well.
        let g = g_value(&q(2, 1.0, 1e-4)).unwrap();
        assert!((g - 2.0).abs() < 1e-3);
    }

    #[test]
    fn g_is_decreasing_and_bounded_by_n_beta() {
        for &dim in &[2u32, 3] {
            for &beta in &[0.5, 1.0, 5.0] {
                let mut r = 0.1;
                while r <= 5.0 {
                    let gp = g_prime_ode(&q(dim, beta, r)).unwrap();
                    let g = g_value(&q(dim, beta, r)).unwrap();
                    assert!(gp < 0.0, "g' = {gp} at dim={dim} beta={beta} r={r}");
                    assert!(g < dim as f64 * beta);
                    r += 0.35;
                }
            }
        }
    }

    #[test]
    fn ode_matches_central_difference() {
        let h = 1e-4;
        let base = q(2, 1.0, 1.0);
        let fd = (g_value(&q(2, 1.0, 1.0 + h)).unwrap() - g_value(&q(2, 1.0, 1.0 - h)).unwrap())
            / (2.0 * h);
        let ode = g_prime_ode(&base).unwrap();
        assert!(
            ((fd - ode) / ode).abs() < 1e-6,
            "finite difference {fd} vs closed form {ode}"
        );
    }

    #[test]
    fn ode_consistency_over_grid() {
        // Lighter version of the acceptance sweep.
        let h = 1e-5;
        for &dim in &[2u32, 3] {
            for &beta in &[0.5, 1.0, 5.0] {
                for i in 0..10 {
                    let r = 0.1 + 0.54 * i as f64;
                    let fd = (g_value(&q(dim, beta, r + h)).unwrap()
                        - g_value(&q(dim, beta, r - h)).unwrap())
                        / (2.0 * h);
                    let ode = g_prime_ode(&q(dim, beta, r)).unwrap();
                    assert!(
                        ((fd - ode) / ode).abs() < 1e-5,
                        "dim={dim} beta={beta} r={r}: fd {fd} vs ode {ode}"
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_prime_is_negative() {
        for &r in &[0.2, 1.0, 3.0] {
            assert!(lambda_prime(&q(2, 1.0, r)).unwrap() < 0.0);
            assert!(lambda_prime(&q(3, 2.0, r)).unwrap() < 0.0);
        }
    }
}
