use thiserror::Error;

/// Errors raised by structural mismatches and partial operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("no image for generator {0}")]
    Undefined(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("not invertible: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
