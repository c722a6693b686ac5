//! Shared per-domain evaluation: geometry, asymmetry, extrapolated
//! finite-element eigenvalue and the equal-volume ball reference. The corpus
//! commands all consume these records, so shared columns agree exactly.

use crate::config::{DomainSpec, ExperimentConfig};
use crate::Result;
use ball_spectrum::{robin_eigenvalue_ball, BallQuery};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use robin_fem::refine_and_extrapolate_from;
use star_geometry::{fraenkel_asymmetry_with, AsymmetryOptions};
use std::f64::consts::{FRAC_PI_2, PI};

/// One corpus row: everything the deficit experiments need for a domain at
/// one Robin parameter.
#[derive(Debug, Clone)]
pub struct DomainRecord {
    pub domain: String,
    pub is_disc: bool,
    pub beta: f64,
    pub area: f64,
    pub perimeter: f64,
    /// Equal-volume ball radius.
    pub ball_radius: f64,
    /// Extrapolated finite-element eigenvalue of the domain.
    pub lambda: f64,
    /// Exact eigenvalue of the equal-volume ball.
    pub lambda_ball: f64,
    /// lambda - lambda_ball.
    pub deficit: f64,
    pub asymmetry: f64,
    /// Minimum nodal value of the L2-normalized finest eigenfunction.
    pub u_min: f64,
    /// P(Omega) - P(B).
    pub perimeter_deficit: f64,
    /// Eigenvalue deficit (left side of the perimeter inequality).
    pub step2_lhs: f64,
    /// (beta/2) u_min^2 (P(Omega) - P(B)).
    pub step2_rhs: f64,
    pub deficit_over_asym_sq: f64,
    /// |lambda_finest - lambda_extrapolated| of the refinement study.
    pub error_estimate: f64,
    pub asym_converged: bool,
}

/// Multistart ring rotation derived from the run seed and the domain index.
fn ring_jitter(seed: u64, domain_index: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(domain_index as u64));
    rng.random_range(0.0..FRAC_PI_2)
}

/// Evaluates every (domain, beta) pair of the config, rows ordered by domain
/// first and beta second. Domains are processed in parallel; per-row numbers
/// do not depend on the scheduling.
pub fn evaluate_corpus(cfg: &ExperimentConfig) -> Result<Vec<DomainRecord>> {
    let specs: Vec<(usize, DomainSpec)> =
        cfg.domains.iter().cloned().enumerate().collect();
    let per_domain: Vec<Result<Vec<DomainRecord>>> = specs
        .par_iter()
        .map(|(idx, spec)| evaluate_domain(cfg, *idx, spec))
        .collect();
    let mut rows = Vec::with_capacity(cfg.domains.len() * cfg.betas.len());
    for r in per_domain {
        rows.extend(r?);
    }
    Ok(rows)
}

fn evaluate_domain(
    cfg: &ExperimentConfig,
    index: usize,
    spec: &DomainSpec,
) -> Result<Vec<DomainRecord>> {
    let domain = spec.build()?;
    let area = domain.area()?;
    let perimeter = domain.perimeter()?;
    let ball_radius = (area / PI).sqrt();
    let perimeter_deficit = perimeter - 2.0 * PI * ball_radius;

    let opts = AsymmetryOptions {
        ring_jitter: ring_jitter(cfg.seed, index),
        ..AsymmetryOptions::default()
    };
    let asym = fraenkel_asymmetry_with(&domain, &opts)?;

    let sectors = spec.aligned_sectors(cfg.mesh_base_sectors);
    let mut rows = Vec::with_capacity(cfg.betas.len());
    for &beta in &cfg.betas {
        let study = refine_and_extrapolate_from(
            &domain,
            beta,
            cfg.mesh_base_rings,
            sectors,
            cfg.mesh_levels,
        )?;
        let lambda_ball = robin_eigenvalue_ball(&BallQuery::new(2, beta, ball_radius)?)?.lambda;
        let deficit = study.lambda_extrapolated - lambda_ball;
        let ratio = if asym.value > 1e-6 {
            deficit / (asym.value * asym.value)
        } else {
            f64::NAN
        };
        rows.push(DomainRecord {
            domain: spec.label(),
            is_disc: spec.is_disc(),
            beta,
            area,
            perimeter,
            ball_radius,
            lambda: study.lambda_extrapolated,
            lambda_ball,
            deficit,
            asymmetry: asym.value,
            u_min: study.u_min_finest,
            perimeter_deficit,
            step2_lhs: deficit,
            step2_rhs: 0.5 * beta * study.u_min_finest.powi(2) * perimeter_deficit,
            deficit_over_asym_sq: ratio,
            error_estimate: study.error_estimate,
            asym_converged: asym.converged,
        });
    }
    Ok(rows)
}
