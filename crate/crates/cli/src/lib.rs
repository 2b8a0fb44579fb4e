//! Command-line front end for `radical-reparam`: curve expressions, JSON job
//! files, reports, closed-form transform listings and sample tables.

pub mod config;
pub mod expr;
pub mod output;
pub mod run;

pub use config::{Emit, JobConfig};
pub use expr::{parse_expression, ParseError};
pub use output::write_outputs;
pub use run::{emit_samples, run_pipeline, PipelineOutput};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("coordinate {coordinate}: {source}")]
    Parse {
        coordinate: usize,
        #[source]
        source: ParseError,
    },
    #[error("ConfigError: {0}")]
    Config(String),
    #[error("IoError: {0}")]
    Io(String),
    #[error(transparent)]
    Numerical(#[from] radical_reparam::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Config(_) | CliError::Io(_) => EXIT_CONFIG,
            CliError::Numerical(radical_reparam::Error::InvalidCurve(_)) => EXIT_CONFIG,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}
