//! Mesh-refinement study with Richardson extrapolation of the eigenvalue.

use crate::eigensolve::smallest_robin_eigenpair;
use crate::mesh::mesh_star_domain;
use crate::{FemError, Result};
use star_geometry::StarDomain;

const EIGEN_TOL: f64 = 1e-11;

#[derive(Debug, Clone)]
pub struct RefinementStudy {
    /// Eigenvalues per level, coarsest first.
    pub lambdas: Vec<f64>,
    /// Mesh sizes per level.
    pub hs: Vec<f64>,
    /// Richardson extrapolation of the last two levels assuming O(h^2).
    pub lambda_extrapolated: f64,
    /// Minimum nodal value of the normalized eigenfunction on the finest mesh.
    pub u_min_finest: f64,
    /// |lambda_finest - lambda_extrapolated|.
    pub error_estimate: f64,
    /// log2 of successive eigenvalue-difference ratios.
    pub observed_orders: Vec<f64>,
    /// Ratio of the finest eigenfunction's max nodal value to its L2 norm.
    pub sup_over_l2_finest: f64,
    /// False when the level differences change sign; raw values still stand.
    pub monotone: bool,
}

/// Refinement study with the default base mesh of 8 rings and 24 sectors.
pub fn refine_and_extrapolate(d: &StarDomain, beta: f64, levels: u32) -> Result<RefinementStudy> {
    refine_and_extrapolate_from(d, beta, 8, 24, levels)
}

/// Solves on `levels` meshes whose ring and sector counts double per level,
/// then Richardson-extrapolates the eigenvalue assuming O(h^2) convergence.
pub fn refine_and_extrapolate_from(
    d: &StarDomain,
    beta: f64,
    base_rings: u32,
    base_sectors: u32,
    levels: u32,
) -> Result<RefinementStudy> {
    if levels < 3 {
        return Err(FemError::InvalidParameter(format!(
            "refinement study needs at least 3 levels, got {levels}"
        )));
    }
    let mut lambdas = Vec::with_capacity(levels as usize);
    let mut hs = Vec::with_capacity(levels as usize);
    let mut u_min_finest = f64::NAN;
    let mut sup_over_l2 = f64::NAN;
    for level in 0..levels {
        let rings = base_rings << level;
        let sectors = base_sectors << level;
        let mesh = mesh_star_domain(d, rings, sectors)?;
        let sol = smallest_robin_eigenpair(&mesh, beta, EIGEN_TOL)?;
        lambdas.push(sol.lambda);
        hs.push(mesh.h);
        if level == levels - 1 {
            u_min_finest = sol.u_min;
            sup_over_l2 = sol.u.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
        }
    }

    let n = lambdas.len();
    let lambda_extrapolated = (4.0 * lambdas[n - 1] - lambdas[n - 2]) / 3.0;
    let error_estimate = (lambdas[n - 1] - lambda_extrapolated).abs();

    let diffs: Vec<f64> = lambdas.windows(2).map(|w| w[0] - w[1]).collect();
    let monotone = diffs.iter().all(|&d| d > 0.0) || diffs.iter().all(|&d| d < 0.0);
    let observed_orders = diffs
        .windows(2)
        .map(|w| (w[0] / w[1]).abs().log2())
        .collect();

    Ok(RefinementStudy {
        lambdas,
        hs,
        lambda_extrapolated,
        u_min_finest,
        error_estimate,
        observed_orders,
        sup_over_l2_finest: sup_over_l2,
        monotone,
    })
}
