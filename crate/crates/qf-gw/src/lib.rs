//! Grothendieck-Witt and Witt rings of diagonal forms.

mod brute;
mod equality;
mod error;
mod form;
mod invariants;
mod kbar;
mod parse;
mod presentation;
mod square;

pub use brute::brute_force_isometry;
pub use equality::{gw_compare, gw_equal, in_i_power, witt_compare, witt_equal, witt_reduce, Decision, WittElement};
pub use error::{GwError, Result};
pub use form::{DiagonalForm, GWElement};
pub use invariants::{
    clifford, det, disc, hasse, hilbert, invariants, prime_factors, relevant_places, signature, InvariantProfile, Place,
};
pub use kbar::{e_n, milnor_mod2, KBar};
pub use parse::parse_form;
pub use presentation::CoefficientTheory;
pub use square::SquareClass;

use field_arith::FieldElement;

/// ⟨b/a⟩ − 1, the class attached to a node of y² = x³ + ax + b.
pub fn nodal_class(a: &FieldElement, b: &FieldElement) -> Result<GWElement> {
    if a.is_zero() || b.is_zero() {
        return Err(GwError::ZeroEntry);
    }
    let r = b.div(a)?;
    Ok(GWElement::unit(&r)?.sub(&GWElement::one(a.field())))
}
