//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal contract between operations was violated by the caller.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// Randomized generation exhausted its retry budget.
    #[error("generation failure: {0}")]
    GenerationFailure(String),

    /// A state or structure exceeds the supported size.
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),

    /// Text parsing failure (network files), with a 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Invalid experiment configuration, with the offending field path.
    #[error("config error at `{field}`: {msg}")]
    Config { field: String, msg: String },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }

    pub fn config(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            msg: msg.into(),
        }
    }
}
