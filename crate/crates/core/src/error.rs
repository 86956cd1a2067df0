//! Error taxonomy shared by every module.
//!
//! The variants map one-to-one onto the CLI exit codes: invalid arguments,
//! schema and format problems are usage errors; integrity errors cover
//! mismatched hashes and missing artifacts; numerical failures cover
//! divergence and singular systems.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A computation produced nonfinite values or failed to converge.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// A file or byte stream does not match its declared format.
    #[error("format error: {0}")]
    FormatError(String),

    /// The request exceeds a configured capability limit (e.g. the dense
    /// Hessian oracle dimension).
    #[error("capability exceeded: {0}")]
    CapabilityExceeded(String),

    /// Artifacts disagree with each other (hash mismatch, missing input).
    #[error("integrity error: {0}")]
    IntegrityError(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::NumericalFailure(msg.into())
    }

    pub fn format(msg: impl Into<String>) -> Self {
        Error::FormatError(msg.into())
    }

    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::IntegrityError(msg.into())
    }
}
