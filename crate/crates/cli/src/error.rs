use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VALIDATION: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const ASSERTION: u8 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] factorlab_core::Error),

    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use factorlab_core::Error as E;
        match self {
            CliError::Core(E::Parse(_) | E::UnknownName { .. }) => exit::PARSE,
            CliError::Core(E::Assertion(_)) => exit::ASSERTION,
            CliError::Core(_) => exit::VALIDATION,
            CliError::Read { .. } | CliError::Usage(_) => exit::PARSE,
            CliError::Write { .. } => exit::VALIDATION,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
