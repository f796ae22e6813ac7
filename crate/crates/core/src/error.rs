use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("no samples")]
    NoSamples,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("trivial dual")]
    TrivialDual,
    #[error("empty collection")]
    EmptyCollection,
    #[error("negative scale factor {0}")]
    NegativeScale(f64),
    #[error("dual vector {0:?} is not in the negative dual cone")]
    NotInDualCone(Vec<f64>),
    #[error("zero vector where a direction is required")]
    ZeroVector,
    #[error("halfspace representation unavailable in dimension {0}")]
    DimensionTooLarge(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("non-finite intermediate value")]
    NonFinite,
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("degenerate segment")]
    DegenerateSegment,
    #[error("no witness at resolution")]
    NoWitness,
    #[error("point {0:?} is outside the effective domain")]
    OutsideDomain(Vec<f64>),
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
