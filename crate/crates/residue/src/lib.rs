//! Twisted residue maps on Milnor-Witt symbols along prime divisors of
//! rational function fields.

mod context;
mod error;
mod preset;
mod relation;
mod residue;

pub use context::{ResidueResult, ValuationContext};
pub use error::{ResidueError, Result};
pub use preset::{chart_preset, discriminant_divisor, ChartPreset, IDEAL_C};
pub use relation::{restrict, verify_boundary_relation, BoundaryCheck, BoundaryReport, CycleTerm};
pub use residue::{eps_integer, residue_at, spot_check, total_boundary};
