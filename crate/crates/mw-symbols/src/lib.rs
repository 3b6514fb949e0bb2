//! Milnor-Witt K-theory symbols: expressions, rewriting, evaluation in
//! degrees ≤ 0 and the projections to Milnor K-theory and powers of the
//! fundamental ideal.

mod equal;
mod error;
mod eval;
mod expr;
mod normalize;
mod parse;
mod project;
mod twisted;

pub use equal::{mw_compare, mw_equal, Comparison};
pub use error::{MwError, Result};
pub use eval::{eval_gw, eval_witt};
pub use expr::{MWExpr, Word};
pub use normalize::{mw_normalize, mw_normalize_with, NormalizeOptions};
pub use parse::parse_expr;
pub use project::{milnor_zero, project, CartesianImage, MilnorExpr};
pub use qf_gw::Decision;
pub use twisted::TwistedMWExpr;
