//! Tabulation rows consumed by the verification lab's `balls` command.

use crate::eigen::{robin_eigenvalue_ball, BallQuery};
use crate::gfun::g_prime_ode;
use crate::Result;

#[derive(Debug, Clone, Copy)]
pub struct BallTableRow {
    pub dim: u32,
    pub beta: f64,
    pub r: f64,
    pub lambda: f64,
    pub g: f64,
    pub g_prime: f64,
    pub residual: f64,
}

/// Evaluates lambda, g, g' and the implicit-equation residual over the
/// (beta, r) grid, in grid order.
pub fn tabulate(dim: u32, betas: &[f64], r_grid: &[f64]) -> Result<Vec<BallTableRow>> {
    let mut rows = Vec::with_capacity(betas.len() * r_grid.len());
    for &beta in betas {
        for &r in r_grid {
            let q = BallQuery::new(dim, beta, r)?;
            let sol = robin_eigenvalue_ball(&q)?;
            rows.push(BallTableRow {
                dim,
                beta,
                r,
                lambda: sol.lambda,
                g: r * sol.lambda,
                g_prime: g_prime_ode(&q)?,
                residual: sol.residual,
            });
        }
    }
    Ok(rows)
}
