//! Convexity diagnostics for g and for the penalized map lambda + k |B_r|.

use crate::eigen::{ball_volume, robin_eigenvalue_ball, BallQuery};
use crate::Result;
use crate::BallError;

/// Centered second-difference quotients approximating f'' on a (possibly
/// nonuniform) grid; entry i corresponds to grid point i+1.
///
/// Exact zero on affine data regardless of spacing.
pub fn second_difference_quotients(xs: &[f64], fs: &[f64]) -> Vec<f64> {
    assert_eq!(xs.len(), fs.len());
    let mut out = Vec::with_capacity(xs.len().saturating_sub(2));
    for i in 1..xs.len().saturating_sub(1) {
        let (xm, x0, xp) = (xs[i - 1], xs[i], xs[i + 1]);
        let (fm, f0, fp) = (fs[i - 1], fs[i], fs[i + 1]);
        let d = 2.0
            * (fm / ((x0 - xm) * (xp - xm)) - f0 / ((x0 - xm) * (xp - x0))
                + fp / ((xp - x0) * (xp - xm)));
        out.push(d);
    }
    out
}

/// Second differences of g and of r -> lambda(B_r) + k |B_r| along a grid.
#[derive(Debug, Clone)]
pub struct ConvexityScan {
    pub dim: u32,
    pub beta: f64,
    pub k: f64,
    pub r: Vec<f64>,
    pub g: Vec<f64>,
    pub penalized: Vec<f64>,
    /// Second-difference quotients of g (one per interior grid point).
    pub g_second: Vec<f64>,
    /// Second-difference quotients of lambda + k |B_r|.
    pub penalized_second: Vec<f64>,
    /// Indices (into the interior points) where a quotient is nonpositive.
    pub g_violations: Vec<usize>,
    pub penalized_violations: Vec<usize>,
}

impl ConvexityScan {
    /// Empirical uniform-convexity constant: the smallest second-difference
    /// quotient of the penalized map on the grid.
    pub fn min_penalized_second(&self) -> f64 {
        self.penalized_second
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

/// Evaluates g and lambda + k|B_r| along `r_grid` (at least 3 increasing
/// points) and reports all centered second differences, flagging any
/// nonpositive value.
pub fn convexity_scan(dim: u32, beta: f64, k: f64, r_grid: &[f64]) -> Result<ConvexityScan> {
    if r_grid.len() < 3 {
        return Err(BallError::InvalidQuery(format!(
            "convexity scan needs at least 3 grid points, got {}",
            r_grid.len()
        )));
    }
    if !r_grid.windows(2).all(|w| w[0] < w[1]) {
        return Err(BallError::InvalidQuery(
            "convexity scan grid must be strictly increasing".into(),
        ));
    }
    let mut g = Vec::with_capacity(r_grid.len());
    let mut penalized = Vec::with_capacity(r_grid.len());
    for &r in r_grid {
        let lambda = robin_eigenvalue_ball(&BallQuery::new(dim, beta, r)?)?.lambda;
        g.push(r * lambda);
        penalized.push(lambda + k * ball_volume(dim, r));
    }
    let g_second = second_difference_quotients(r_grid, &g);
    let penalized_second = second_difference_quotients(r_grid, &penalized);
    let flag = |d2: &[f64]| {
        d2.iter()
            .enumerate()
            .filter(|(_, v)| **v <= 0.0)
            .map(|(i, _)| i)
            .collect::<Vec<_>>()
    };
    Ok(ConvexityScan {
        dim,
        beta,
        k,
        r: r_grid.to_vec(),
        g,
        penalized,
        g_violations: flag(&g_second),
        penalized_violations: flag(&penalized_second),
        g_second,
        penalized_second,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(lo: f64, step: f64, hi: f64) -> Vec<f64> {
        let mut v = Vec::new();
        let mut x = lo;
        while x <= hi + 0.5 * step {
            v.push(x);
            x += step;
        }
        v
    }

    #[test]
    fn differencing_vanishes_on_affine_data() {
        let xs = [0.5, 1.25, 3.0];
        let fs: Vec<f64> = xs.iter().map(|x| 4.0 * x - 7.0).collect();
        let d2 = second_difference_quotients(&xs, &fs);
        assert_eq!(d2.len(), 1);
        assert!(d2[0].abs() < 1e-12);
    }

    #[test]
    fn differencing_recovers_constant_curvature() {
        let xs = grid(0.0, 0.1, 1.0);
        let fs: Vec<f64> = xs.iter().map(|x| 3.0 * x * x).collect();
        for d in second_difference_quotients(&xs, &fs) {
            assert!((d - 6.0).abs() < 1e-9);
        }
    }

    #[test]
    fn g_is_strictly_convex_on_the_standard_grid() {
        let scan = convexity_scan(2, 1.0, 1.0, &grid(0.1, 0.05, 5.0)).unwrap();
        assert!(scan.g_violations.is_empty(), "{:?}", scan.g_violations);
        assert!(scan.g_second.iter().all(|&d| d > 0.0));
    }

    #[test]
    fn penalized_map_is_uniformly_convex() {
        let scan = convexity_scan(2, 1.0, 1.0, &grid(0.1, 0.05, 5.0)).unwrap();
        assert!(scan.penalized_violations.is_empty());
        assert!(scan.min_penalized_second() > 0.0);
    }

    #[test]
    fn three_dimensional_scan_is_convex_too() {
        let scan = convexity_scan(3, 0.5, 0.3, &grid(0.2, 0.2, 4.0)).unwrap();
        assert!(scan.g_violations.is_empty());
        assert!(scan.penalized_violations.is_empty());
    }

    #[test]
    fn short_grid_is_rejected() {
        assert!(convexity_scan(2, 1.0, 1.0, &[0.5, 1.0]).is_err());
    }
}
