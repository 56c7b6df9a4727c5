//! Library side of the `hopfideal` binary: config loading, commands and
//! report rendering. The acceptance suite drives these functions directly.

pub mod commands;
pub mod config;
pub mod report;

pub use commands::{AnnMethod, IdealsAction, ModuleSelector, Options, ShowWhat};
pub use config::DatumConfig;
pub use report::{Format, Record, Report};

use hopfideal_core::{DatumError, IdealError, ModuleError};

/// Seed used when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Datum(#[from] DatumError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

impl CliError {
    /// 2 for unreadable or malformed input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::Ideal(IdealError::Parse(_)) => 2,
            _ => 1,
        }
    }
}
