//! Bigraded algebras over Grothendieck-Witt coefficients given by generators
//! and relations. Each bidegree (codimension, twist in Pic/2) is computed as
//! a finitely presented abelian group through Smith normal form.
//!
//! Products are taken to be strictly commutative.

mod algebra;
mod coeff;
mod error;
mod expr;
mod imode;
mod ops;
mod presentation;
mod preset;

pub use algebra::{group_factors, Algebra, Cell, Element, GradedPieceReport};
pub use coeff::Coefficients;
pub use error::{AlgebraError, Result};
pub use expr::{monomial_name, parse_polynomial, Atom, Polynomial, Term};
pub use imode::{IAlgebra, IPieceReport};
pub use ops::{chow_algebra, cokernel, euler_class, localization_cokernel_check, rank_collapse, CokernelCell, CokernelReport};
pub use presentation::{AlgebraPresentation, GeneratorSpec, Mode, PresentationFile};
pub use preset::{bmu, preset, preset_names};

/// Graded piece of a presentation in bidegree (i, t).
pub fn graded_piece(p: &AlgebraPresentation, c: &Coefficients, i: u32, t: u8) -> Result<GradedPieceReport> {
    Ok(Algebra::new(p, c)?.graded_piece(i, t))
}

/// Table of graded pieces for i ≤ max_degree and both twists.
pub fn table(a: &Algebra, max_degree: u32) -> Vec<GradedPieceReport> {
    (0..=max_degree).flat_map(|i| [0, 1].map(|t| a.graded_piece(i, t))).collect()
}
