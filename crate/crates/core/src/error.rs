//! Crate-wide error type.

use std::fmt;
use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug)]
pub enum Error {
    /// A caller-supplied value violates an operation's precondition.
    InvalidArgument(String),
    /// An operation was invoked on an object in the wrong state.
    InvalidState(String),
    /// A binary container (MCI sample or checkpoint) failed to parse.
    /// `offset` is the byte position at which decoding failed.
    Format { offset: u64, message: String },
    /// A metric is undefined for the given confusion matrix (e.g. every
    /// class is empty).
    UndefinedMetric(String),
    /// Training produced a non-finite loss or gradient.
    NonFinite(String),
    /// A recomputed report value differs from the stored one.
    VerificationMismatch(String),
    /// Some cells of a batch experiment failed; completed cells are kept.
    PartialFailure(String),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}

impl Error {
    pub fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn invalid_state(msg: impl Into<String>) -> Self {
        Error::InvalidState(msg.into())
    }

    pub fn format(offset: u64, msg: impl Into<String>) -> Self {
        Error::Format {
            offset,
            message: msg.into(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn json(path: impl Into<PathBuf>, source: serde_json::Error) -> Self {
        Error::Json {
            path: path.into(),
            source,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::InvalidState(msg) => write!(f, "invalid state: {msg}"),
            Error::Format { offset, message } => {
                write!(f, "format error at byte {offset}: {message}")
            }
            Error::UndefinedMetric(msg) => write!(f, "undefined metric: {msg}"),
            Error::NonFinite(msg) => write!(f, "non-finite value: {msg}"),
            Error::VerificationMismatch(msg) => write!(f, "verification mismatch: {msg}"),
            Error::PartialFailure(msg) => write!(f, "partial failure: {msg}"),
            Error::Io { path, source } => write!(f, "io error on {}: {source}", path.display()),
            Error::Json { path, source } => {
                write!(f, "json error on {}: {source}", path.display())
            }
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io { source, .. } => Some(source),
            Error::Json { source, .. } => Some(source),
            _ => None,
        }
    }
}
