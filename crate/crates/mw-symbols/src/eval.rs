use qf_gw::{witt_reduce, GWElement, WittElement};

use crate::error::{MwError, Result};
use crate::expr::{MWExpr, Word};

/// ∏(⟨a_i⟩ − 1) ∈ GW(F), the image of η^n[a₁,…,a_n] in K^MW_0 ≅ GW.
pub(crate) fn word_value(x: &MWExpr, w: &Word) -> Result<GWElement> {
    let f = x.field();
    let one = GWElement::one(f);
    let mut acc = one.clone();
    for a in &w.symbols {
        acc = acc.try_mul(&GWElement::unit(a)?.sub(&one))?;
    }
    Ok(acc)
}

/// Σ c·∏(⟨a_i⟩ − 1), ignoring the η exponents.
pub(crate) fn pfister_sum(x: &MWExpr) -> Result<GWElement> {
    let mut acc = GWElement::zero(x.field());
    for (w, c) in x.terms() {
        acc = acc.try_add(&word_value(x, w)?.scale(c))?;
    }
    Ok(acc)
}

/// The isomorphism K^MW_0(F) ≅ GW(F), ⟨a⟩ ↦ 1 + η[a] inverted.
pub fn eval_gw(x: &MWExpr) -> Result<GWElement> {
    match x.degree()? {
        None | Some(0) => pfister_sum(x),
        Some(d) => Err(MwError::Degree { expected: "0".into(), found: d }),
    }
}

/// The isomorphism K^MW_{−n}(F) ≅ W(F), η^n ↦ 1, for n ≥ 1.
pub fn eval_witt(x: &MWExpr) -> Result<WittElement> {
    match x.degree()? {
        None => Ok(witt_reduce(&GWElement::zero(x.field()))),
        Some(d) if d < 0 => Ok(witt_reduce(&pfister_sum(x)?)),
        Some(d) => Err(MwError::Degree { expected: "negative".into(), found: d }),
    }
}
