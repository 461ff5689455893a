use thiserror::Error;

use crate::setup::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid rank {0}: must be at least 1")]
    InvalidRank(usize),

    #[error("rank mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{0} is not a root of the system")]
    InvalidRoot(String),

    #[error("{what} = {value} is out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("invalid Harish-Chandra datum: {}", join(.0))]
    InvalidDatum(Vec<Violation>),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cochain error: {0}")]
    Cochain(String),

    #[error("precision exhausted: coefficient of order {order} requested, germ known only below order {precision}")]
    PrecisionExhausted { order: i64, precision: i64 },
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
