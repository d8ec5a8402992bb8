//! Error type shared by every module in the crate.

use std::fmt;
use std::io;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, FtcmError>;

/// Errors emitted by clustering, merging, pipeline and I/O operations.
#[derive(Debug)]
pub enum FtcmError {
    /// An operation received arguments that violate its preconditions
    /// (bad shapes, non-finite values, out-of-range counts).
    InvalidInput(String),
    /// A file could not be decoded. `location` names the offending byte
    /// offset, line number or key so the input can be fixed.
    FormatError { location: String, message: String },
    /// An internal data-structure invariant was broken (always a bug).
    InternalInvariantViolation(String),
    /// Underlying I/O failure.
    Io(io::Error),
}

impl fmt::Display for FtcmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FtcmError::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            FtcmError::FormatError { location, message } => {
                write!(f, "format error at {location}: {message}")
            }
            FtcmError::InternalInvariantViolation(msg) => {
                write!(f, "internal invariant violated: {msg}")
            }
            FtcmError::Io(err) => write!(f, "i/o error: {err}"),
        }
    }
}

impl std::error::Error for FtcmError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            FtcmError::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<io::Error> for FtcmError {
    fn from(err: io::Error) -> Self {
        FtcmError::Io(err)
    }
}

impl FtcmError {
    /// Shorthand for [`FtcmError::InvalidInput`].
    pub fn invalid(msg: impl Into<String>) -> Self {
        FtcmError::InvalidInput(msg.into())
    }

    /// Shorthand for [`FtcmError::FormatError`].
    pub fn format(location: impl Into<String>, message: impl Into<String>) -> Self {
        FtcmError::FormatError {
            location: location.into(),
            message: message.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_names_location() {
        let err = FtcmError::format("byte 12", "bad magic");
        assert_eq!(err.to_string(), "format error at byte 12: bad magic");
    }

    #[test]
    fn io_error_wraps_source() {
        let err: FtcmError = io::Error::new(io::ErrorKind::NotFound, "gone").into();
        assert!(matches!(err, FtcmError::Io(_)));
    }
}
