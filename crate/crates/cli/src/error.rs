use commute_spectra_core::Error as CoreError;
use thiserror::Error;

use crate::parse::ParseError;

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid group spec {input:?}: {source}")]
    Parse { input: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::OrderOverCap { .. } | CoreError::SpectralCap { .. } | CoreError::FieldTooLarge { .. }) => EXIT_CAP,
            CliError::Core(CoreError::ReconstructionMismatch) | CliError::Mismatch(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        }
    }
}
