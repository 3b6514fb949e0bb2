use std::fmt;

use field_arith::{BaseField, Field, FieldElement, FieldRef};

use crate::error::{GwError, Result};
use crate::form::GWElement;
use crate::invariants::{clifford, det, disc, hasse, relevant_places, signature};
use crate::square::SquareClass;

/// Outcome of an equality test that may be out of reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Equal,
    NotEqual,
    Undecided,
}

impl Decision {
    pub fn from_bool(b: bool) -> Decision {
        if b {
            Decision::Equal
        } else {
            Decision::NotEqual
        }
    }

    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::NotEqual, _) | (_, Decision::NotEqual) => Decision::NotEqual,
            (Decision::Equal, Decision::Equal) => Decision::Equal,
            _ => Decision::Undecided,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Equal => "equal",
            Decision::NotEqual => "not equal",
            Decision::Undecided => "undecided",
        })
    }
}

/// If every entry is a constant of a rational function field, the element
/// over the constant field. GW(k) → GW(k(x₁,…,x_n)) is injective.
fn constants(x: &GWElement) -> Option<GWElement> {
    let field = x.field();
    if field.residue_of.is_some() || field.vars.is_empty() {
        return None;
    }
    let base = Field::base_only(field.base);
    let all_const = x.positive().iter().chain(x.negative()).all(|c| c.rep().as_constant().is_some());
    if !all_const {
        return None;
    }
    x.map_entries(&base, |e| Ok(FieldElement::from_rational(&base, &e.as_constant().unwrap())?)).ok()
}

fn is_plain(field: &FieldRef) -> bool {
    !field.is_function_field()
}

/// Equality of genuine forms of equal rank by the complete invariants of the base field.
fn decide_zero(d: &GWElement) -> Result<bool> {
    if d.rank() != 0 {
        return Ok(false);
    }
    let field = d.field().clone();
    Ok(match field.base {
        BaseField::ComplexModel => true,
        BaseField::RealModel => signature(d) == Some(0),
        BaseField::Prime(_) => det(d).is_one(),
        BaseField::Rationals => {
            let a = d.positive_form();
            let b = d.negative_form();
            let all: Vec<SquareClass> = a.entries.iter().chain(&b.entries).cloned().collect();
            a.det() == b.det()
                && signature(d) == Some(0)
                && relevant_places(&all).into_iter().all(|v| hasse(&a, v) == hasse(&b, v))
        }
    })
}

/// Decides equality in GW(F). Over function fields only syntactic equality
/// and constant forms are recognized; anything else is `Undecided`.
pub fn gw_compare(a: &GWElement, b: &GWElement) -> Result<Decision> {
    let d = a.try_add(&b.neg())?;
    if d.is_zero() {
        return Ok(Decision::Equal);
    }
    if d.rank() != 0 {
        return Ok(Decision::NotEqual);
    }
    if is_plain(d.field()) {
        return Ok(Decision::from_bool(decide_zero(&d)?));
    }
    match constants(&d) {
        Some(c) => Ok(Decision::from_bool(decide_zero(&c)?)),
        None => Ok(Decision::Undecided),
    }
}

/// Equality in GW(F). Function fields support syntactic equality only.
pub fn gw_equal(a: &GWElement, b: &GWElement) -> Result<bool> {
    Ok(gw_compare(a, b)? == Decision::Equal)
}

/// Equality in W(F): the difference has even rank 2k and equals k·h.
pub fn witt_compare(a: &GWElement, b: &GWElement) -> Result<Decision> {
    let d = a.try_add(&b.neg())?;
    if d.rank() % 2 != 0 {
        return Ok(Decision::NotEqual);
    }
    let h = GWElement::hyperbolic(d.field()).scale(d.rank() / 2);
    gw_compare(&d, &h)
}

pub fn witt_equal(a: &GWElement, b: &GWElement) -> Result<bool> {
    Ok(witt_compare(a, b)? == Decision::Equal)
}

/// A class in W(F), held through a reduced representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittElement {
    rep: GWElement,
}

impl WittElement {
    pub fn representative(&self) -> &GWElement {
        &self.rep
    }

    pub fn is_zero(&self) -> Result<bool> {
        witt_equal(&self.rep, &GWElement::zero(self.rep.field()))
    }
}

impl fmt::Display for WittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Reduces to a genuine form without hyperbolic pairs. Over ℂ, ℝ and 𝔽_p
/// the result is the anisotropic representative.
pub fn witt_reduce(x: &GWElement) -> WittElement {
    let field = x.field().clone();
    let one = SquareClass::one(&field);
    let minus = SquareClass::minus_one(&field);
    let mut entries = x.genuine().entries;
    entries.sort();
    let mut out: Vec<SquareClass> = Vec::new();
    for e in entries {
        let partner = e.neg();
        match out.iter().position(|o| *o == partner) {
            Some(j) => {
                out.remove(j);
            }
            None => out.push(e),
        }
    }
    let g = GWElement::new(&field, out, vec![]);
    let rep = if is_plain(&field) {
        match field.base {
            BaseField::ComplexModel => GWElement::integer(&field, g.rank() % 2),
            BaseField::RealModel => {
                let s = signature(&g).unwrap();
                let c = if s >= 0 { one } else { minus };
                GWElement::new(&field, vec![c; s.unsigned_abs() as usize], vec![])
            }
            BaseField::Prime(_) => {
                let s = disc(&g);
                if g.rank() % 2 == 1 {
                    GWElement::class(&s)
                } else if s.is_one() {
                    GWElement::zero(&field)
                } else {
                    GWElement::new(&field, vec![one, s.neg()], vec![])
                }
            }
            BaseField::Rationals => g,
        }
    } else {
        g
    };
    WittElement { rep }
}

/// Membership in the n-th power of I = ker(rank) ⊂ GW(F), for n ≤ 3.
pub fn in_i_power(x: &GWElement, n: u32) -> Result<bool> {
    if n > 3 {
        return Err(GwError::PowerOutOfRange(n));
    }
    if n == 0 || x.is_zero() {
        return Ok(true);
    }
    if x.rank() != 0 {
        return Ok(false);
    }
    let field = x.field().clone();
    let x = if is_plain(&field) {
        x.clone()
    } else {
        constants(x).ok_or(GwError::Unsupported { op: "ideal membership", field: field.to_string() })?
    };
    Ok(match x.field().base {
        BaseField::ComplexModel => true,
        BaseField::RealModel => signature(&x).unwrap() % (1 << n) == 0,
        BaseField::Prime(_) => n == 1 || decide_zero(&x)?,
        BaseField::Rationals => {
            if n == 1 {
                return Ok(true);
            }
            if !det(&x).is_one() {
                return Ok(false);
            }
            n == 2 || {
                let all: Vec<SquareClass> = x.genuine().entries;
                signature(&x).unwrap() % 8 == 0 && relevant_places(&all).into_iter().all(|v| clifford(&x, v) == 1)
            }
        }
    })
}
