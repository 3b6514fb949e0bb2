use qf_gw::GwError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Gw(#[from] GwError),
    #[error("{0} is not finitely generated over Z; use the invariant-truncated mode of the form evaluator instead")]
    NotFinitelyGenerated(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error("inhomogeneous expression: {0}")]
    Inhomogeneous(String),
    #[error("euler_class(0) is undefined")]
    ZeroEuler,
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
