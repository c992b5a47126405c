use thiserror::Error;

use crate::code::HypothesisViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {idx} is out of range for F_3^{m}")]
    IndexOutOfRange { idx: u64, m: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{what}: dimension {m} exceeds the supported maximum {max}")]
    Capacity { what: &'static str, m: usize, max: usize },

    #[error("sweep budget exhausted after {completed} of {total} outer steps")]
    Budget { completed: u64, total: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("code hypotheses violated: {0}")]
    Hypothesis(HypothesisViolation),

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// True for the errors that the CLI reports as resource exhaustion.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. } | Error::Budget { .. })
    }
}
