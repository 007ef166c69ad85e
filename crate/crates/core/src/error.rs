use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at v = sqrt({0})")]
    Pole(u64),
    #[error("inconsistent interpolation data at q = {q}: expected {expected}, got {got}")]
    Inconsistent { q: String, expected: String, got: String },
    #[error("mixed sqrt bases {0} and {1}")]
    BaseMismatch(u64, u64),
    #[error("characteristic mismatch: {0}")]
    CharacteristicMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("search space cap exceeded: {0}")]
    CapExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("engine mismatch: {0} vs {1}")]
    EngineMismatch(String, String),
    #[error("unknown isomorphism class: {0}")]
    UnknownClass(String),
    #[error("element is not homogeneous")]
    NonHomogeneous,
    #[error("Fourier kernel is not invariant: {0}")]
    NotInvariant(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
