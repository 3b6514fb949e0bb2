use field_arith::FieldError;
use mw_symbols::MwError;
use qf_gw::GwError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Gw(#[from] GwError),
    #[error(transparent)]
    Mw(#[from] MwError),
    #[error("uniformizer {0} does not have valuation 1")]
    NotUniformizer(String),
    #[error("divisor {0} listed twice")]
    DuplicateDivisor(String),
    #[error("twist mismatch at {divisor}: claimed {claimed}, computed {computed}")]
    TwistMismatch { divisor: String, claimed: String, computed: String },
    #[error("no local generator for twist {0}")]
    UnknownTwist(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, ResidueError>;
