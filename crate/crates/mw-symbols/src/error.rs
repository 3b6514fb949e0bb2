use field_arith::FieldError;
use qf_gw::GwError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MwError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Gw(#[from] GwError),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("symbol argument is zero")]
    ZeroSymbol,
    #[error("expression mixes degrees {0} and {1}")]
    MixedDegree(i64, i64),
    #[error("expected degree {expected}, found {found}")]
    Degree { expected: String, found: i64 },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, MwError>;
