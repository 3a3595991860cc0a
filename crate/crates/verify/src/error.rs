use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{name}:{line}: {source}")]
    Parse {
        name: String,
        line: usize,
        #[source]
        source: roman_core::Error,
    },
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("limit out of range: {0}")]
    Limit(String),
    #[error(transparent)]
    Core(#[from] roman_core::Error),
}

impl VerifyError {
    /// Process exit code: 2 for usage, input and limit problems.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;
