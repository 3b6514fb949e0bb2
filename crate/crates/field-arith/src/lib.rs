//! Exact arithmetic in ℚ, 𝔽_p, a real model, a quadratically closed model,
//! and rational function fields over them.

mod divisor;
mod element;
mod error;
mod field;
mod parse;
pub mod poly;
mod square;

pub use divisor::{DivisorMode, PrimeDivisor};
pub use element::FieldElement;
pub use error::{FieldError, Result};
pub use field::{BaseField, Field, FieldRef};
pub use square::{constant_class, is_square, legendre, least_nonresidue, same_class, square_class, squarefree_part};
