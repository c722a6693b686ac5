//! The radial logarithmic-derivative profile beta_rho = |grad u_B| / u_B of
//! the first eigenfunction and the level-set functional H_B built from it.

use crate::eigen::{bessel_pair, robin_eigenvalue_ball, sphere_area, BallQuery};
use crate::{BallError, Result};
use specfun::integrate;

/// beta_rho sampled on an increasing grid in (0, R]. The profile vanishes at
/// the origin, increases strictly, and ends at the Robin parameter itself.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    pub query: BallQuery,
    pub rho_grid: Vec<f64>,
    pub beta_rho: Vec<f64>,
}

/// beta_rho = sqrt(lambda) J_{N/2}(sqrt(lambda) rho) / J_{N/2-1}(sqrt(lambda) rho).
///
/// For N=2 this is sqrt(lambda) J_1/J_0 of the scaled radius; for N=3 the
/// half-integer closed forms reduce it to (sin x - x cos x)/(rho sin x).
pub(crate) fn beta_rho_at(dim: u32, sqrt_lambda: f64, rho: f64) -> Result<f64> {
    let x = sqrt_lambda * rho;
    let (j_num, j_den) = bessel_pair(dim, x);
    if j_den <= 0.0 {
        return Err(BallError::VanishingEigenfunction(rho));
    }
    Ok(sqrt_lambda * j_num / j_den)
}

/// Samples the profile at n_points radii rho_i = R i / n_points, i = 1..=n.
pub fn radial_profile(q: &BallQuery, n_points: usize) -> Result<RadialProfile> {
    if n_points < 2 {
        return Err(BallError::InvalidQuery(format!(
            "radial profile needs at least 2 points, got {n_points}"
        )));
    }
    let sol = robin_eigenvalue_ball(q)?;
    let mut rho_grid = Vec::with_capacity(n_points);
    let mut beta_rho = Vec::with_capacity(n_points);
    for i in 1..=n_points {
        let rho = q.radius * i as f64 / n_points as f64;
        rho_grid.push(rho);
        beta_rho.push(beta_rho_at(q.dim, sol.sqrt_lambda, rho)?);
    }
    for w in beta_rho.windows(2) {
        if !(w[0] < w[1]) {
            return Err(BallError::InvalidQuery(format!(
                "profile failed to increase strictly ({} then {})",
                w[0], w[1]
            )));
        }
    }
    let last = *beta_rho.last().unwrap();
    if (last - q.beta).abs() > 1e-8 {
        return Err(BallError::ResidualTooLarge {
            residual: (last - q.beta).abs(),
        });
    }
    Ok(RadialProfile {
        query: *q,
        rho_grid,
        beta_rho,
    })
}

/// H_B(B_s, beta_rho) = (1/|B_s|) ( int_{dB_s} beta_rho dH^{N-1}
///                                  - int_{B_s} beta_rho^2 dx ).
///
/// Constant in s and equal to the eigenvalue; evaluated by quadrature of the
/// radial profile.
pub fn hb_functional(q: &BallQuery, s: f64) -> Result<f64> {
    if !(s > 0.0 && s < q.radius) {
        return Err(BallError::InvalidQuery(format!(
            "H_B level radius must lie in (0, {}), got {s}",
            q.radius
        )));
    }
    let sol = robin_eigenvalue_ball(q)?;
    let dim = q.dim;
    let surface = beta_rho_at(dim, sol.sqrt_lambda, s)? * sphere_area(dim, s);
    let mut inner_err = None;
    let volume_integrand = |rho: f64| match beta_rho_at(dim, sol.sqrt_lambda, rho) {
        Ok(b) => b * b * sphere_area(dim, rho),
        Err(e) => {
            inner_err = Some(e);
            f64::NAN
        }
    };
    let tol = 1e-13 * (1.0 + sol.lambda * s.powi(dim as i32));
    let volume = integrate(volume_integrand, 0.0, s, tol);
    if let Some(e) = inner_err {
        return Err(e);
    }
    let volume = volume?;
    let ball = crate::eigen::ball_volume(dim, s);
    Ok((surface - volume) / ball)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(dim: u32, beta: f64, r: f64) -> BallQuery {
        BallQuery::new(dim, beta, r).unwrap()
    }

    #[test]
    fn profile_hits_beta_at_the_boundary() {
        let p = radial_profile(&q(2, 1.0, 1.0), 64).unwrap();
        assert!((p.beta_rho.last().unwrap() - 1.0).abs() < 1e-8);
        let p3 = radial_profile(&q(3, 2.0, 1.5), 64).unwrap();
        assert!((p3.beta_rho.last().unwrap() - 2.0).abs() < 1e-8);
    }

    #[test]
    fn profile_vanishes_toward_the_origin() {
        let sol = robin_eigenvalue_ball(&q(2, 1.0, 1.0)).unwrap();
        let mut prev = f64::INFINITY;
        for &rho in &[1e-2, 1e-4, 1e-6] {
            let b = beta_rho_at(2, sol.sqrt_lambda, rho).unwrap();
            assert!(b < prev);
            // Leading behavior is lambda * rho / N.
            assert!((b - sol.lambda * rho / 2.0).abs() < 1e-3 * sol.lambda * rho);
            prev = b;
        }
    }

    #[test]
    fn profile_is_strictly_increasing() {
        let p = radial_profile(&q(2, 5.0, 2.0), 200).unwrap();
        for w in p.beta_rho.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn hb_equals_lambda_at_midlevel() {
        let query = q(2, 1.0, 1.0);
        let lambda = robin_eigenvalue_ball(&query).unwrap().lambda;
        let h = hb_functional(&query, 0.5).unwrap();
        assert!((h - lambda).abs() <= 1e-8, "H = {h}, lambda = {lambda}");
    }

    #[test]
    fn hb_is_constant_in_s() {
        for &(dim, beta, r) in &[(2u32, 1.0, 1.0), (3u32, 0.5, 2.0), (2u32, 5.0, 0.5)] {
            let query = q(dim, beta, r);
            let lambda = robin_eigenvalue_ball(&query).unwrap().lambda;
            for i in 1..=20 {
                let s = r * i as f64 / 21.0;
                let h = hb_functional(&query, s).unwrap();
                assert!(
                    (h - lambda).abs() <= 1e-7 * lambda,
                    "dim={dim} beta={beta} r={r} s={s}: H={h} lambda={lambda}"
                );
            }
        }
    }

    #[test]
    fn hb_near_the_endpoints() {
        let query = q(2, 1.0, 1.0);
        let lambda = robin_eigenvalue_ball(&query).unwrap().lambda;
        let h_small = hb_functional(&query, 1e-3).unwrap();
        assert!((h_small - lambda).abs() < 1e-5 * lambda);
        let h_edge = hb_functional(&query, 1.0 - 1e-9).unwrap();
        assert!((h_edge - lambda).abs() < 1e-6);
    }

    #[test]
    fn eigenball_identity_rearranged() {
        // int_0^1 2 rho beta_rho^2 drho = 2 beta - lambda for N=2, R=1.
        let query = q(2, 1.0, 1.0);
        let sol = robin_eigenvalue_ball(&query).unwrap();
        let v = integrate(
            |rho| 2.0 * rho * beta_rho_at(2, sol.sqrt_lambda, rho).unwrap().powi(2),
            0.0,
            1.0,
            1e-12,
        )
        .unwrap();
        assert!((v - (2.0 - sol.lambda)).abs() < 1e-10);
    }

    #[test]
    fn hb_rejects_levels_outside_the_ball() {
        let query = q(2, 1.0, 1.0);
        assert!(hb_functional(&query, 0.0).is_err());
        assert!(hb_functional(&query, 1.0).is_err());
    }
}
