use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("malformed generating function: {0}")]
    MalformedGeneratingFunction(String),
    #[error("empty sequence")]
    EmptySequence,
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
