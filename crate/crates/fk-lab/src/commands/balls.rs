//! Ball tabulation: lambda, g, g' and residuals over the (beta, r) grid,
//! convexity scans, and the penalty constant with its global-minimum check.

use super::CommandOutcome;
use crate::config::ExperimentConfig;
use crate::report::Report;
use crate::Result;
use ball_spectrum::{
    ball_volume, convexity_scan, g_value, penalized_k_for_volume, tabulate, BallQuery,
};

pub fn run(cfg: &ExperimentConfig) -> Result<CommandOutcome> {
    let dim = cfg.dim;
    let volume = cfg.volume.expect("validated");
    let rows = tabulate(dim, &cfg.betas, &cfg.r_grid)?;

    let mut report = Report::new(vec![
        "dim", "beta", "r", "lambda", "g", "g_prime", "residual", "error_estimate",
    ]);
    for row in &rows {
        report.push(vec![
            (row.dim as u64).into(),
            row.beta.into(),
            row.r.into(),
            row.lambda.into(),
            row.g.into(),
            row.g_prime.into(),
            row.residual.into(),
            row.residual.into(),
        ]);
    }

    let mut summary = Vec::new();
    let mut failures = Vec::new();
    let worst_residual = rows.iter().map(|r| r.residual).fold(0.0f64, f64::max);
    summary.push(format!("worst |G| residual over the grid: {worst_residual:e}"));
    if worst_residual > 1e-10 {
        failures.push(format!(
            "residual budget exceeded: {worst_residual:e} > 1e-10"
        ));
    }

    for &beta in &cfg.betas {
        let k = penalized_k_for_volume(dim, beta, volume)?;
        let scan = convexity_scan(dim, beta, k, &cfg.r_grid)?;
        if !scan.g_violations.is_empty() {
            failures.push(format!(
                "beta={beta}: {} nonpositive second differences of g",
                scan.g_violations.len()
            ));
        }
        if !scan.penalized_violations.is_empty() {
            failures.push(format!(
                "beta={beta}: {} nonpositive second differences of lambda + k|B_r|",
                scan.penalized_violations.len()
            ));
        }
        let uniform = scan.min_penalized_second();
        if !(uniform > 0.0) {
            failures.push(format!(
                "beta={beta}: uniform convexity constant {uniform} is not positive"
            ));
        }

        // Small-radius limit of g.
        let n_beta = dim as f64 * beta;
        let g_small = g_value(&BallQuery::new(dim, beta, 1e-3)?)?;
        if (g_small - n_beta).abs() > 0.01 * n_beta {
            failures.push(format!(
                "beta={beta}: g(0.001) = {g_small} departs from N beta = {n_beta} by more than 1%"
            ));
        }

        // The penalty constant must make the prescribed ball the scan minimizer.
        let r_m = (volume / ball_volume(dim, 1.0)).powf(1.0 / dim as f64);
        let mut best_idx = 0;
        for (i, (&_r, &lam)) in scan.r.iter().zip(scan.penalized.iter()).enumerate() {
            if lam < scan.penalized[best_idx] {
                best_idx = i;
            }
        }
        let grid_step = scan.r[1] - scan.r[0];
        if (scan.r[best_idx] - r_m).abs() > grid_step * (1.0 + 1e-9) {
            failures.push(format!(
                "beta={beta}: penalized scan minimizer {} is not within one grid step of r_m = {r_m}",
                scan.r[best_idx]
            ));
        }
        summary.push(format!(
            "beta={beta}: k={k:.12e}, uniform convexity constant {uniform:.6e}, scan minimizer r={}",
            scan.r[best_idx]
        ));
    }

    Ok(CommandOutcome {
        report,
        summary,
        failures,
    })
}
