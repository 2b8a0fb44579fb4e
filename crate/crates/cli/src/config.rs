use std::collections::BTreeSet;
use std::path::Path;

use serde::Deserialize;

use crate::CliError;

pub const DEFAULT_TOLERANCE: f64 = radical_reparam::DEFAULT_TOLERANCE;
pub const DEFAULT_SAMPLES: usize = 200;

/// Artifact kinds written by a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Emit {
    Report,
    Transform,
    Samples,
    #[value(name = "omega_profile")]
    OmegaProfile,
}

impl Emit {
    pub const ALL: [Emit; 4] = [Emit::Report, Emit::Transform, Emit::Samples, Emit::OmegaProfile];
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    /// One expression in `t` per coordinate.
    pub coordinates: Vec<String>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_emit")]
    pub emit: BTreeSet<Emit>,
    #[serde(default)]
    pub extra_breakpoints: usize,
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

fn default_samples() -> usize {
    DEFAULT_SAMPLES
}

fn default_emit() -> BTreeSet<Emit> {
    Emit::ALL.into_iter().collect()
}

impl JobConfig {
    pub fn new(coordinates: Vec<String>) -> Self {
        Self {
            coordinates,
            tolerance: DEFAULT_TOLERANCE,
            samples: DEFAULT_SAMPLES,
            emit: default_emit(),
            extra_breakpoints: 0,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| CliError::Config(format!("invalid job file: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.coordinates.len() < 2 {
            return Err(CliError::Config("at least two coordinates are required".into()));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(CliError::Config(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.samples < 2 {
            return Err(CliError::Config(format!("samples must be at least 2, got {}", self.samples)));
        }
        Ok(())
    }
}
