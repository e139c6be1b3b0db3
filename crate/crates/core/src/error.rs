use thiserror::Error;

/// Errors raised while building or combining vertices and colorings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {what} has {found} dimensions, expected {expected}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("a hypercube needs at least 2 dimensions, got {0}")]
    TooFewDimensions(usize),
    #[error("parse error at position {position} in {input:?}: {reason}")]
    Parse {
        input: String,
        position: usize,
        reason: String,
    },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid word constraint: {0}")]
    InvalidWordConstraint(String),
    #[error("dimension {dim} out of range 1..={n}")]
    DimensionOutOfRange { dim: usize, n: usize },
}

impl Error {
    pub(crate) fn parse(input: &str, position: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            reason: reason.into(),
        }
    }

    pub(crate) fn mismatch(what: &'static str, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            what,
            expected,
            found,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
