//! Error type shared across the toolkit, with a stable mapping to CLI exit codes.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Mismatched image/tensor dimensions.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Input data violates an invariant (non-finite values, out-of-range samples, ...).
    #[error("invalid data: {0}")]
    Data(String),

    /// A parameter or configuration value is out of its documented range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An on-disk artifact could not be parsed or has the wrong format version.
    #[error("format error in {path}: {reason}")]
    Format { path: PathBuf, reason: String },

    /// Training produced a non-finite loss; details point at the offending batch.
    #[error("non-finite loss at iteration {iteration} (batch samples {batch:?}); diagnostics at {dump}")]
    NonFiniteLoss {
        iteration: u64,
        batch: Vec<String>,
        dump: PathBuf,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn format(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            reason: reason.into(),
        }
    }

    /// Stable process exit code: 0 success, 1 runtime failure, 2 usage/config
    /// error, 3 data/format error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parameter(_) => 2,
            Error::Shape(_) | Error::Data(_) | Error::Format { .. } => 3,
            Error::NonFiniteLoss { .. } | Error::Io { .. } => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
