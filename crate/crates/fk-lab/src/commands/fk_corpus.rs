//! Eigenvalue deficits against the equal-volume ball across the domain
//! corpus, with the squared-asymmetry lower-bound statistics.

use super::CommandOutcome;
use crate::config::ExperimentConfig;
use crate::corpus::{evaluate_corpus, DomainRecord};
use crate::report::Report;
use crate::Result;

pub(crate) fn record_report(records: &[DomainRecord]) -> Report {
    let mut report = Report::new(vec![
        "domain",
        "beta",
        "area",
        "perimeter",
        "ball_radius",
        "lambda",
        "lambda_ball",
        "deficit",
        "asymmetry",
        "u_min",
        "perimeter_deficit",
        "step2_lhs",
        "step2_rhs",
        "deficit_over_asym_sq",
        "error_estimate",
    ]);
    for r in records {
        report.push(vec![
            r.domain.clone().into(),
            r.beta.into(),
            r.area.into(),
            r.perimeter.into(),
            r.ball_radius.into(),
            r.lambda.into(),
            r.lambda_ball.into(),
            r.deficit.into(),
            r.asymmetry.into(),
            r.u_min.into(),
            r.perimeter_deficit.into(),
            r.step2_lhs.into(),
            r.step2_rhs.into(),
            r.deficit_over_asym_sq.into(),
            r.error_estimate.into(),
        ]);
    }
    report
}

pub fn run(cfg: &ExperimentConfig) -> Result<CommandOutcome> {
    let records = evaluate_corpus(cfg)?;
    let report = record_report(&records);

    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for r in &records {
        if r.deficit < -3.0 * r.error_estimate {
            failures.push(format!(
                "{} beta={}: deficit {:.6e} below the -3*error_estimate guard ({:.1e})",
                r.domain, r.beta, r.deficit, r.error_estimate
            ));
        }
        if !r.asym_converged {
            failures.push(format!(
                "{}: asymmetry search flagged as not converged",
                r.domain
            ));
        }
        if r.is_disc {
            if r.deficit.abs() > 3.0 * r.error_estimate + 1e-6 {
                failures.push(format!(
                    "disc row beta={}: deficit {:.3e} not within tolerance of zero",
                    r.beta, r.deficit
                ));
            }
            if r.asymmetry > 1.5e-3 {
                failures.push(format!(
                    "disc row beta={}: asymmetry {:.3e} not within tolerance of zero",
                    r.beta, r.asymmetry
                ));
            }
        }
    }

    let min_ratio = records
        .iter()
        .filter(|r| !r.is_disc)
        .map(|r| r.deficit_over_asym_sq)
        .fold(f64::INFINITY, f64::min);
    summary.push(format!(
        "min deficit / asymmetry^2 over non-disc rows: {min_ratio:.6e}"
    ));
    if !records.iter().all(|r| r.is_disc) && !(min_ratio > 0.0) {
        failures.push(format!(
            "quantitative lower bound violated: min deficit/asymmetry^2 = {min_ratio:.6e}"
        ));
    }
    summary.push(format!("{} corpus rows evaluated", records.len()));

    Ok(CommandOutcome {
        report,
        summary,
        failures,
    })
}
