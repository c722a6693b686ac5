//! Flat key-value config files.
//!
//! Grammar, one statement per line:
//!
//! ```text
//! # comment (blank lines allowed)
//! key = value                 scalars: integers, reals, identifiers, paths
//! key = v1, v2, v3            lists: comma-separated reals
//! key = lo : step : hi        ranges: inclusive arithmetic progressions
//! domain = shape(args)        repeatable; shapes: disc(R),
//!                             ellipse(eps[, normalized]),
//!                             perturbed_disc(a, m),
//!                             regular_polygon(n, R)
//! ```
//!
//! Recognized keys: `experiment`, `dim`, `beta`, `r_grid`, `volume`,
//! `mesh_levels`, `mesh_base_rings`, `mesh_base_sectors`, `seed`, `format`,
//! `out`, `domain`, `eps`, `trial_volumes`. Unknown keys are rejected.

use crate::{LabError, Result};
use star_geometry::StarDomain;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Balls,
    FkCorpus,
    Step2,
    Sharpness,
    Step3,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Balls => "balls",
            Command::FkCorpus => "fk-corpus",
            Command::Step2 => "step2",
            Command::Sharpness => "sharpness",
            Command::Step3 => "step3",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "balls" => Ok(Command::Balls),
            "fk-corpus" => Ok(Command::FkCorpus),
            "step2" => Ok(Command::Step2),
            "sharpness" => Ok(Command::Sharpness),
            "step3" => Ok(Command::Step3),
            other => Err(LabError::Config(format!("unknown experiment '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    Disc(f64),
    Ellipse { eps: f64, normalized: bool },
    PerturbedDisc { a: f64, m: u32 },
    RegularPolygon { n: u32, circumradius: f64 },
}

impl DomainSpec {
    pub fn build(&self) -> Result<StarDomain> {
        Ok(match *self {
            DomainSpec::Disc(r) => StarDomain::disc(r)?,
            DomainSpec::Ellipse { eps, normalized } => StarDomain::ellipse(eps, normalized)?,
            DomainSpec::PerturbedDisc { a, m } => StarDomain::perturbed_disc(a, m)?,
            DomainSpec::RegularPolygon { n, circumradius } => {
                StarDomain::regular_polygon(n, circumradius)?
            }
        })
    }

    pub fn is_disc(&self) -> bool {
        matches!(self, DomainSpec::Disc(_))
    }

    /// Sector counts that place polygon vertices on mesh nodes.
    pub fn aligned_sectors(&self, base: u32) -> u32 {
        match *self {
            DomainSpec::RegularPolygon { n, .. } => base.div_ceil(n) * n,
            _ => base,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            DomainSpec::Disc(r) => format!("disc({r})"),
            DomainSpec::Ellipse { eps, normalized } => {
                if normalized {
                    format!("ellipse({eps},normalized)")
                } else {
                    format!("ellipse({eps})")
                }
            }
            DomainSpec::PerturbedDisc { a, m } => format!("perturbed_disc({a},{m})"),
            DomainSpec::RegularPolygon { n, circumradius } => {
                format!("regular_polygon({n},{circumradius})")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub experiment: Option<Command>,
    pub dim: u32,
    pub betas: Vec<f64>,
    pub domains: Vec<DomainSpec>,
    pub mesh_levels: u32,
    pub mesh_base_rings: u32,
    pub mesh_base_sectors: u32,
    pub seed: u64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    /// Radius grid for the balls command.
    pub r_grid: Vec<f64>,
    /// Target measure for the penalty constant in the balls command.
    pub volume: Option<f64>,
    /// Ellipse parameters for the sharpness command.
    pub eps: Vec<f64>,
    /// Trial-volume grid size for the step3 chain.
    pub trial_volumes: u32,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            experiment: None,
            dim: 2,
            betas: vec![1.0],
            domains: Vec::new(),
            mesh_levels: 4,
            mesh_base_rings: 8,
            mesh_base_sectors: 24,
            seed: 0,
            format: OutputFormat::Csv,
            out: None,
            r_grid: Vec::new(),
            volume: None,
            eps: Vec::new(),
            trial_volumes: 20,
        }
    }
}

fn parse_f64(key: &str, v: &str) -> Result<f64> {
    v.trim()
        .parse::<f64>()
        .map_err(|_| LabError::Config(format!("key '{key}': '{v}' is not a real number")))
}

fn parse_list(key: &str, v: &str) -> Result<Vec<f64>> {
    v.split(',').map(|tok| parse_f64(key, tok)).collect()
}

/// `lo : step : hi`, inclusive of `hi` up to half-step fuzz.
fn parse_range(key: &str, v: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = v.split(':').collect();
    if parts.len() != 3 {
        return Err(LabError::Config(format!(
            "key '{key}': expected 'lo : step : hi', got '{v}'"
        )));
    }
    let lo = parse_f64(key, parts[0])?;
    let step = parse_f64(key, parts[1])?;
    let hi = parse_f64(key, parts[2])?;
    if !(step > 0.0) || hi < lo {
        return Err(LabError::Config(format!(
            "key '{key}': need step > 0 and hi >= lo in '{v}'"
        )));
    }
    let n = ((hi - lo) / step + 0.5).floor() as usize;
    Ok((0..=n).map(|i| lo + step * i as f64).collect())
}

fn parse_domain(v: &str) -> Result<DomainSpec> {
    let v = v.trim();
    let open = v
        .find('(')
        .ok_or_else(|| LabError::Config(format!("domain '{v}': expected shape(args)")))?;
    if !v.ends_with(')') {
        return Err(LabError::Config(format!("domain '{v}': missing ')'")));
    }
    let name = v[..open].trim();
    let args: Vec<&str> = v[open + 1..v.len() - 1]
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let arg_f64 = |i: usize| -> Result<f64> {
        args.get(i)
            .ok_or_else(|| LabError::Config(format!("domain '{v}': missing argument {i}")))
            .and_then(|s| parse_f64("domain", s))
    };
    match name {
        "disc" => {
            if args.len() != 1 {
                return Err(LabError::Config(format!("domain '{v}': disc takes one radius")));
            }
            Ok(DomainSpec::Disc(arg_f64(0)?))
        }
        "ellipse" => match args.len() {
            1 => Ok(DomainSpec::Ellipse { eps: arg_f64(0)?, normalized: false }),
            2 if args[1] == "normalized" => {
                Ok(DomainSpec::Ellipse { eps: arg_f64(0)?, normalized: true })
            }
            _ => Err(LabError::Config(format!(
                "domain '{v}': ellipse takes (eps) or (eps, normalized)"
            ))),
        },
        "perturbed_disc" => {
            if args.len() != 2 {
                return Err(LabError::Config(format!(
                    "domain '{v}': perturbed_disc takes (a, m)"
                )));
            }
            let m = arg_f64(1)?;
            if m.fract() != 0.0 || m < 1.0 {
                return Err(LabError::Config(format!(
                    "domain '{v}': mode m must be a positive integer"
                )));
            }
            Ok(DomainSpec::PerturbedDisc { a: arg_f64(0)?, m: m as u32 })
        }
        "regular_polygon" => {
            if args.len() != 2 {
                return Err(LabError::Config(format!(
                    "domain '{v}': regular_polygon takes (n, R)"
                )));
            }
            let n = arg_f64(0)?;
            if n.fract() != 0.0 || n < 3.0 {
                return Err(LabError::Config(format!(
                    "domain '{v}': vertex count must be an integer >= 3"
                )));
            }
            Ok(DomainSpec::RegularPolygon { n: n as u32, circumradius: arg_f64(1)? })
        }
        other => Err(LabError::Config(format!("unknown shape '{other}'"))),
    }
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(LabError::Config(format!(
                    "line {}: expected 'key = value', got '{line}'",
                    lineno + 1
                )));
            };
            let key = key.trim();
            let value = value.trim();
            match key {
                "experiment" => cfg.experiment = Some(Command::parse(value)?),
                "dim" => {
                    cfg.dim = parse_f64(key, value)? as u32;
                    if cfg.dim != 2 && cfg.dim != 3 {
                        return Err(LabError::Config(format!(
                            "dim must be 2 or 3, got {}",
                            cfg.dim
                        )));
                    }
                }
                "beta" => cfg.betas = parse_list(key, value)?,
                "r_grid" => cfg.r_grid = parse_range(key, value)?,
                "volume" => cfg.volume = Some(parse_f64(key, value)?),
                "mesh_levels" => cfg.mesh_levels = parse_f64(key, value)? as u32,
                "mesh_base_rings" => cfg.mesh_base_rings = parse_f64(key, value)? as u32,
                "mesh_base_sectors" => cfg.mesh_base_sectors = parse_f64(key, value)? as u32,
                "seed" => {
                    cfg.seed = value.parse::<u64>().map_err(|_| {
                        LabError::Config(format!("seed must be an unsigned integer, got '{value}'"))
                    })?
                }
                "format" => {
                    cfg.format = match value {
                        "csv" => OutputFormat::Csv,
                        "json" => OutputFormat::Json,
                        other => {
                            return Err(LabError::Config(format!(
                                "format must be csv or json, got '{other}'"
                            )))
                        }
                    }
                }
                "out" => cfg.out = Some(PathBuf::from(value)),
                "domain" => cfg.domains.push(parse_domain(value)?),
                "eps" => cfg.eps = parse_list(key, value)?,
                "trial_volumes" => cfg.trial_volumes = parse_f64(key, value)? as u32,
                other => {
                    return Err(LabError::Config(format!(
                        "line {}: unknown key '{other}'",
                        lineno + 1
                    )))
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LabError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn validate(&self) -> Result<()> {
        if self.betas.is_empty() || self.betas.iter().any(|&b| !(b > 0.0)) {
            return Err(LabError::Config("beta list must be positive".into()));
        }
        if self.mesh_levels < 3 {
            return Err(LabError::Config("mesh_levels must be at least 3".into()));
        }
        if self.mesh_base_rings < 2 || self.mesh_base_sectors < 8 {
            return Err(LabError::Config(
                "mesh base must have at least 2 rings and 8 sectors".into(),
            ));
        }
        if self.trial_volumes < 5 {
            return Err(LabError::Config("trial_volumes must be at least 5".into()));
        }
        for &e in &self.eps {
            if !(0.0 < e && e < 1.0) {
                return Err(LabError::Config(format!("eps values must lie in (0, 1), got {e}")));
            }
        }
        Ok(())
    }

    /// Command-specific requirements, checked after CLI overrides.
    pub fn validate_for(&self, cmd: Command) -> Result<()> {
        if let Some(declared) = self.experiment {
            if declared != cmd {
                return Err(LabError::Config(format!(
                    "config declares experiment '{}' but the '{}' command was invoked",
                    declared.name(),
                    cmd.name()
                )));
            }
        }
        match cmd {
            Command::Balls => {
                if self.r_grid.len() < 3 {
                    return Err(LabError::Config(
                        "balls needs an r_grid with at least 3 points".into(),
                    ));
                }
                if self.volume.is_none() {
                    return Err(LabError::Config(
                        "balls needs a target volume for the penalty constant".into(),
                    ));
                }
            }
            Command::FkCorpus | Command::Step2 | Command::Step3 => {
                if self.domains.is_empty() {
                    return Err(LabError::Config("no domains configured".into()));
                }
                if self.dim != 2 {
                    return Err(LabError::Config("domain experiments require dim = 2".into()));
                }
            }
            Command::Sharpness => {
                if self.eps.len() < 4 {
                    return Err(LabError::Config(
                        "sharpness needs at least 4 eps values".into(),
                    ));
                }
                if self.eps.iter().any(|&e| !(0.03..=0.3).contains(&e)) {
                    return Err(LabError::Config(
                        "sharpness eps values must lie in [0.03, 0.3]".into(),
                    ));
                }
                if self.dim != 2 {
                    return Err(LabError::Config("sharpness requires dim = 2".into()));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_config() {
        let text = "\
# corpus
experiment = fk-corpus
dim = 2
beta = 0.5, 1, 5
mesh_levels = 4
seed = 42
format = json
domain = disc(1.0)
domain = ellipse(0.1, normalized)
domain = perturbed_disc(0.03, 2)
domain = regular_polygon(5, 1.0)
";
        let cfg = ExperimentConfig::parse(text).unwrap();
        assert_eq!(cfg.experiment, Some(Command::FkCorpus));
        assert_eq!(cfg.betas, vec![0.5, 1.0, 5.0]);
        assert_eq!(cfg.domains.len(), 4);
        assert_eq!(cfg.format, OutputFormat::Json);
        assert_eq!(cfg.seed, 42);
        assert!(cfg.validate_for(Command::FkCorpus).is_ok());
        assert!(cfg.validate_for(Command::Step2).is_err());
    }

    #[test]
    fn range_is_inclusive() {
        let cfg = ExperimentConfig::parse("r_grid = 0.1 : 0.05 : 0.3\nvolume = 3.14").unwrap();
        assert_eq!(cfg.r_grid.len(), 5);
        assert!((cfg.r_grid[4] - 0.3).abs() < 1e-12);
    }

    #[test]
    fn rejects_unknown_keys_and_shapes() {
        assert!(ExperimentConfig::parse("wavelength = 3").is_err());
        assert!(ExperimentConfig::parse("domain = heptagram(7)").is_err());
        assert!(ExperimentConfig::parse("beta = -1").is_err());
        assert!(ExperimentConfig::parse("experiment = cubes").is_err());
        assert!(ExperimentConfig::parse("domain = disc(1.0").is_err());
    }

    #[test]
    fn polygon_sector_alignment() {
        let spec = DomainSpec::RegularPolygon { n: 5, circumradius: 1.0 };
        assert_eq!(spec.aligned_sectors(24), 25);
        assert_eq!(spec.aligned_sectors(25), 25);
        let disc = DomainSpec::Disc(1.0);
        assert_eq!(disc.aligned_sectors(24), 24);
    }

    #[test]
    fn sharpness_eps_window_is_enforced() {
        let cfg = ExperimentConfig::parse("eps = 0.05, 0.1, 0.15, 0.4");
        assert!(cfg.is_err());
        let cfg = ExperimentConfig::parse("eps = 0.05, 0.1, 0.15").unwrap();
        assert!(cfg.validate_for(Command::Sharpness).is_err());
    }
}
