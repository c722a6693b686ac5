//! Ellipse-family sharpness: log-log exponents of the asymmetry and of the
//! eigenvalue deficit in the axis parameter, and the boundedness of
//! deficit / asymmetry^2 across the family.

use super::{fit_slope, CommandOutcome};
use crate::config::{DomainSpec, ExperimentConfig};
use crate::report::Report;
use crate::Result;
use ball_spectrum::{robin_eigenvalue_ball, BallQuery};
use rayon::prelude::*;
use robin_fem::refine_and_extrapolate_from;
use star_geometry::{fraenkel_asymmetry_with, AsymmetryOptions};
use std::f64::consts::FRAC_PI_2;

struct EpsRow {
    eps: f64,
    asymmetry: f64,
    deficit: f64,
    error_estimate: f64,
}

pub fn run(cfg: &ExperimentConfig) -> Result<CommandOutcome> {
    let beta = cfg.betas[0];
    let rows: Vec<Result<EpsRow>> = cfg
        .eps
        .par_iter()
        .enumerate()
        .map(|(i, &eps)| -> Result<EpsRow> {
            let spec = DomainSpec::Ellipse { eps, normalized: true };
            let domain = spec.build()?;
            let jitter = {
                use rand::Rng;
                use rand_chacha::rand_core::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(
                    cfg.seed.wrapping_add(i as u64),
                );
                rng.random_range(0.0..FRAC_PI_2)
            };
            let asym = fraenkel_asymmetry_with(
                &domain,
                &AsymmetryOptions { ring_jitter: jitter, ..AsymmetryOptions::default() },
            )?;
            let study = refine_and_extrapolate_from(
                &domain,
                beta,
                cfg.mesh_base_rings,
                cfg.mesh_base_sectors,
                cfg.mesh_levels,
            )?;
            let r_eq = domain.equal_volume_ball_radius()?;
            let ball = robin_eigenvalue_ball(&BallQuery::new(2, beta, r_eq)?)?.lambda;
            Ok(EpsRow {
                eps,
                asymmetry: asym.value,
                deficit: study.lambda_extrapolated - ball,
                error_estimate: study.error_estimate,
            })
        })
        .collect();
    let rows: Vec<EpsRow> = rows.into_iter().collect::<Result<_>>()?;

    let mut report = Report::new(vec![
        "eps",
        "asymmetry",
        "deficit",
        "deficit_over_asym_sq",
        "error_estimate",
    ]);
    for r in &rows {
        report.push(vec![
            r.eps.into(),
            r.asymmetry.into(),
            r.deficit.into(),
            (r.deficit / (r.asymmetry * r.asymmetry)).into(),
            r.error_estimate.into(),
        ]);
    }

    let log_eps: Vec<f64> = rows.iter().map(|r| r.eps.ln()).collect();
    let log_asym: Vec<f64> = rows.iter().map(|r| r.asymmetry.ln()).collect();
    let log_def: Vec<f64> = rows.iter().map(|r| r.deficit.ln()).collect();
    let (p_asym, b_asym) = fit_slope(&log_eps, &log_asym);
    let (p_deficit, b_def) = fit_slope(&log_eps, &log_def);
    let residual = |slope: f64, intercept: f64, ys: &[f64]| -> f64 {
        log_eps
            .iter()
            .zip(ys)
            .map(|(x, y)| (y - (slope * x + intercept)).abs())
            .fold(0.0f64, f64::max)
    };
    let res_asym = residual(p_asym, b_asym, &log_asym);
    let res_def = residual(p_deficit, b_def, &log_def);

    let ratios: Vec<f64> = rows
        .iter()
        .map(|r| r.deficit / (r.asymmetry * r.asymmetry))
        .collect();
    let ratio_max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let ratio_min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let spread = ratio_max / ratio_min;

    let mut summary = vec![
        format!("fitted asymmetry exponent p_asym = {p_asym:.4} (max log residual {res_asym:.2e})"),
        format!("fitted deficit exponent p_deficit = {p_deficit:.4} (max log residual {res_def:.2e})"),
        format!("deficit/asymmetry^2 in [{ratio_min:.6e}, {ratio_max:.6e}], spread {spread:.3}"),
    ];
    if res_asym > 0.2 || res_def > 0.2 {
        summary.push("flag: log-log fit residual above 0.2".to_string());
    }

    let mut failures = Vec::new();
    if !(1.9..=2.1).contains(&p_asym) {
        failures.push(format!(
            "asymmetry exponent {p_asym:.4} outside [1.9, 2.1]"
        ));
    }
    if !(1.8..=2.2).contains(&p_deficit) {
        failures.push(format!(
            "deficit exponent {p_deficit:.4} outside [1.8, 2.2]"
        ));
    }
    if !(spread <= 4.0) {
        failures.push(format!(
            "deficit/asymmetry^2 spread {spread:.3} exceeds 4"
        ));
    }

    Ok(CommandOutcome {
        report,
        summary,
        failures,
    })
}
