use field_arith::FieldError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GwError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("unsupported field {field} for {op}")]
    Unsupported { op: &'static str, field: String },
    #[error("ideal power {0} out of range 0..=3")]
    PowerOutOfRange(u32),
    #[error("brute-force bounds exceeded: {0}")]
    Bounds(String),
    #[error("zero entry in a diagonal form")]
    ZeroEntry,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, GwError>;
