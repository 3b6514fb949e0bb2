use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} of zero")]
    ZeroInput(&'static str),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("negative valuation {0}")]
    NegativeValuation(i64),
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("substitution makes a denominator vanish")]
    Pole,
}

pub type Result<T> = std::result::Result<T, FieldError>;
