//! Command implementations. Each command produces a report plus summary and
//! assertion-failure lines; numeric problems surface as errors.

mod balls;
mod fk_corpus;
mod sharpness;
mod step2;
mod step3;

use crate::config::{Command, ExperimentConfig};
use crate::report::Report;
use crate::Result;

pub struct CommandOutcome {
    pub report: Report,
    /// Human-readable diagnostics, printed to stdout.
    pub summary: Vec<String>,
    /// Failed assertions; any entry makes the process exit with 1.
    pub failures: Vec<String>,
}

impl CommandOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }
}

pub fn run(cmd: Command, cfg: &ExperimentConfig) -> Result<CommandOutcome> {
    cfg.validate_for(cmd)?;
    match cmd {
        Command::Balls => balls::run(cfg),
        Command::FkCorpus => fk_corpus::run(cfg),
        Command::Step2 => step2::run(cfg),
        Command::Sharpness => sharpness::run(cfg),
        Command::Step3 => step3::run(cfg),
    }
}

/// Least-squares slope of y against x.
pub(crate) fn fit_slope(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (xi, yi) in x.iter().zip(y) {
        sxx += (xi - mx) * (xi - mx);
        sxy += (xi - mx) * (yi - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    (slope, intercept)
}
