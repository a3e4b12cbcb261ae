use thiserror::Error;

use crate::spaces::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("structural constant [{0},{1},{2}] is not known for this space")]
    UnknownConstant(usize, usize, usize),

    #[error("invalid space parameters: {}", format_violations(.0))]
    InvalidSpec(Vec<Violation>),

    #[error("unrealizable parameters: {0}")]
    Unrealizable(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("direction is not traceless (trace = {0})")]
    NotTraceless(String),

    #[error("value is not an exact rational: {0}")]
    Irrational(String),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
