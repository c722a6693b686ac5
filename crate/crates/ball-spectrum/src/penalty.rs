//! The unique penalty constant that turns a prescribed volume into the global
//! ball minimizer of lambda + k |B_r|.

use crate::eigen::{sphere_area, BallQuery};
use crate::gfun::lambda_prime;
use crate::{BallError, Result};
use std::f64::consts::PI;

/// Radius of the ball of measure m in dimension N.
pub(crate) fn radius_for_volume(dim: u32, m: f64) -> f64 {
    match dim {
        2 => (m / PI).sqrt(),
        3 => (3.0 * m / (4.0 * PI)).cbrt(),
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// k > 0 such that r -> lambda(B_r) + k |B_r| is minimized exactly at the
/// ball of measure m.
///
/// First-order condition: k = -lambda'(r_m) / (d|B_r|/dr at r_m), with
/// lambda' taken from the closed-form derivative of g, never from
/// differencing. Uniqueness follows from the uniform convexity of the
/// penalized map.
pub fn penalized_k_for_volume(dim: u32, beta: f64, m: f64) -> Result<f64> {
    if !(m > 0.0) || !m.is_finite() {
        return Err(BallError::InvalidQuery(format!(
            "target measure must be positive, got {m}"
        )));
    }
    let r_m = radius_for_volume(dim, m);
    let q = BallQuery::new(dim, beta, r_m)?;
    let k = -lambda_prime(&q)? / sphere_area(dim, r_m);
    debug_assert!(k > 0.0);
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{ball_volume, robin_eigenvalue_ball};

    #[test]
    fn radius_inverts_volume() {
        for &dim in &[2u32, 3] {
            for &m in &[0.5, PI, 10.0] {
                let r = radius_for_volume(dim, m);
                assert!((ball_volume(dim, r) - m).abs() < 1e-12 * m);
            }
        }
    }

    #[test]
    fn k_is_positive() {
        for &dim in &[2u32, 3] {
            for &beta in &[0.5, 1.0, 5.0] {
                for &m in &[0.5, PI, 8.0] {
                    assert!(penalized_k_for_volume(dim, beta, m).unwrap() > 0.0);
                }
            }
        }
    }

    #[test]
    fn unit_disc_is_the_scan_minimizer() {
        let k = penalized_k_for_volume(2, 1.0, PI).unwrap();
        let penalized = |r: f64| {
            robin_eigenvalue_ball(&BallQuery::new(2, 1.0, r).unwrap())
                .unwrap()
                .lambda
                + k * ball_volume(2, r)
        };
        let mut best_r = f64::NAN;
        let mut best = f64::INFINITY;
        let mut values = Vec::new();
        let n = 281; // r = 0.2 .. 3.0 in steps of 0.01
        for i in 0..n {
            let r = 0.2 + 0.01 * i as f64;
            let v = penalized(r);
            values.push(v);
            if v < best {
                best = v;
                best_r = r;
            }
        }
        assert!(
            (best_r - 1.0).abs() < 0.011,
            "scan minimizer at {best_r}, expected 1.0"
        );
        // Uniform convexity: the first differences change sign exactly once.
        let mut sign_changes = 0;
        for w in values.windows(2) {
            let d = w[1] - w[0];
            if d > 0.0 && sign_changes == 0 {
                sign_changes = 1;
            } else if d < 0.0 && sign_changes == 1 {
                sign_changes = 2;
            }
        }
        assert_eq!(sign_changes, 1, "penalized map should be unimodal");
    }
}
