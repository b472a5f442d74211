use thiserror::Error;

/// Errors raised by the library. Indices in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("matrix is not a Z-matrix")]
    NotZMatrix,

    #[error("t is too small: diagonal entry {index} of B = tI - A would be negative")]
    TTooSmall { index: usize },

    #[error("order {n} exceeds the enumeration cap {cap}")]
    OrderCapExceeded { n: usize, cap: usize },

    #[error("order {n} is below the minimum {min} for this operation")]
    OrderTooSmall { n: usize, min: usize },

    #[error("matrix does not have the inverse cyclic property")]
    NotInverseCyclic,

    #[error("matrix is not entrywise nonnegative")]
    NotNonnegative,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parameters are not strictly increasing at position {index}")]
    NotStrictlyIncreasing { index: usize },

    #[error("a_1 must be nonzero")]
    ZeroA1,

    #[error("diagonal parameter {index} is zero")]
    ZeroDiagonal { index: usize },

    #[error("bdsw parameter {0} is zero")]
    ZeroParameter(String),

    #[error("parameter alpha_{index} violates the {mode} sign restriction")]
    SignViolation { index: usize, mode: &'static str },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
