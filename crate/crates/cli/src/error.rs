use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Field(#[from] field_arith::FieldError),
    #[error(transparent)]
    Gw(#[from] qf_gw::GwError),
    #[error(transparent)]
    Mw(#[from] mw_symbols::MwError),
    #[error(transparent)]
    Residue(#[from] residue::ResidueError),
    #[error(transparent)]
    Algebra(#[from] graded_algebra::AlgebraError),
    #[error("fixtures: {0}")]
    Fixture(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, CliError>;
