//! Experiment lab: ball-eigenvalue tabulation and convexity scans, the
//! eigenvalue-deficit corpus with Fraenkel asymmetry, the eigenfunction-
//! weighted perimeter inequality, the ellipse sharpness fit, and the
//! penalized ball chain. Each command reads a flat key-value config, writes a
//! CSV or JSON report, and reports assertion failures through the exit code.

pub mod commands;
pub mod config;
mod corpus;
mod error;
pub mod report;

pub use commands::{run, CommandOutcome};
pub use config::{Command, DomainSpec, ExperimentConfig, OutputFormat};
pub use corpus::{evaluate_corpus, DomainRecord};
pub use error::LabError;

pub type Result<T> = std::result::Result<T, LabError>;
