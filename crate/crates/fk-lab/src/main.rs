use clap::{Parser, Subcommand};
use fk_lab::{run, Command as LabCommand, ExperimentConfig, LabError, OutputFormat};
use std::path::PathBuf;
use std::process::ExitCode;

/// Eigenvalue-deficit experiments on balls and star-shaped planar domains.
#[derive(Parser)]
#[command(name = "fklab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Experiment configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Report destination (overrides the config).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format: csv or json (overrides the config).
    #[arg(long)]
    format: Option<String>,
    /// Seed for the asymmetry multistart jitter (overrides the config).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Commands {
    /// Tabulate ball eigenvalues, convexity scans and the penalty constant.
    Balls(CommonArgs),
    /// Eigenvalue deficits and asymmetries over the domain corpus.
    #[command(name = "fk-corpus")]
    FkCorpus(CommonArgs),
    /// Eigenfunction-weighted perimeter inequality over the corpus.
    Step2(CommonArgs),
    /// Ellipse-family scaling exponents of asymmetry and deficit.
    Sharpness(CommonArgs),
    /// Penalized ball chain and penalized comparison over the corpus.
    Step3(CommonArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, args) = match cli.command {
        Commands::Balls(a) => (LabCommand::Balls, a),
        Commands::FkCorpus(a) => (LabCommand::FkCorpus, a),
        Commands::Step2(a) => (LabCommand::Step2, a),
        Commands::Sharpness(a) => (LabCommand::Sharpness, a),
        Commands::Step3(a) => (LabCommand::Step3, a),
    };
    match execute(cmd, args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(cmd: LabCommand, args: CommonArgs) -> Result<ExitCode, LabError> {
    let mut cfg = ExperimentConfig::from_file(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if let Some(fmt) = &args.format {
        cfg.format = match fmt.as_str() {
            "csv" => OutputFormat::Csv,
            "json" => OutputFormat::Json,
            other => {
                return Err(LabError::Config(format!(
                    "format must be csv or json, got '{other}'"
                )))
            }
        };
    }
    if let Some(out) = args.out {
        cfg.out = Some(out);
    }

    let outcome = run(cmd, &cfg)?;

    let extension = match cfg.format {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
    };
    let path = cfg
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}.{extension}", cmd.name())));
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(&path, outcome.report.render(cfg.format))?;

    for line in &outcome.summary {
        println!("{line}");
    }
    println!("report written to {}", path.display());
    for failure in &outcome.failures {
        eprintln!("ASSERTION FAILED: {failure}");
    }
    Ok(ExitCode::from(outcome.exit_code() as u8))
}
