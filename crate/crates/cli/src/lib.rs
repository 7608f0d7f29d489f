//! File formats, reports and subcommands behind the `nilquandle` binary.

pub mod commands;
pub mod formats;
pub mod report;

use std::path::PathBuf;

/// Everything that can stop a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Domain(#[from] nilquandle::Error),
}

impl CliError {
    /// 1 for mathematical failures, 2 for malformed input and usage.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
