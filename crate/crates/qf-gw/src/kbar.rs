//! Mod-2 Milnor K-theory k^M_n of the supported base fields, and the
//! invariants e_n : I^n → k^M_n.

use std::collections::BTreeSet;
use std::fmt;

use field_arith::{BaseField, Field, FieldElement, FieldRef};
use num_bigint::BigInt;

use crate::form::GWElement;
use crate::invariants::{clifford, disc, hilbert, relevant_places, signature, Place};
use crate::square::SquareClass;

/// An element of k^M_n(F) in the normal form used for that field and degree:
/// a bit for ℤ/2, a square class for n = 1, the set of places with
/// nontrivial Hilbert symbol for k^M_2(ℚ), or the zero group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KBar {
    Zero,
    Bit(bool),
    Class(SquareClass),
    Places(BTreeSet<Place>),
}

impl KBar {
    pub fn zero(field: &FieldRef, n: u32) -> KBar {
        match (n, field.base) {
            (0, _) => KBar::Bit(false),
            (1, _) => KBar::Class(SquareClass::one(field)),
            (2, BaseField::Rationals) => KBar::Places(BTreeSet::new()),
            (_, BaseField::Rationals | BaseField::RealModel) => KBar::Bit(false),
            _ => KBar::Zero,
        }
    }

    pub fn add(&self, other: &KBar) -> KBar {
        match (self, other) {
            (KBar::Zero, KBar::Zero) => KBar::Zero,
            (KBar::Bit(a), KBar::Bit(b)) => KBar::Bit(a ^ b),
            (KBar::Class(a), KBar::Class(b)) => KBar::Class(a.mul(b)),
            (KBar::Places(a), KBar::Places(b)) => KBar::Places(a.symmetric_difference(b).copied().collect()),
            _ => panic!("adding mod-2 Milnor classes of different degrees"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            KBar::Zero => true,
            KBar::Bit(b) => !b,
            KBar::Class(c) => c.is_one(),
            KBar::Places(s) => s.is_empty(),
        }
    }
}

impl fmt::Display for KBar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KBar::Zero => write!(f, "0"),
            KBar::Bit(b) => write!(f, "{}", u8::from(*b)),
            KBar::Class(c) => write!(f, "{{{c}}}"),
            KBar::Places(s) => {
                let v: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                write!(f, "[{}]", v.join(","))
            }
        }
    }
}

/// Constant field of a function field, when every element is a constant.
fn to_base(field: &FieldRef, xs: &[FieldElement]) -> Option<(FieldRef, Vec<FieldElement>)> {
    if !field.is_function_field() {
        return Some((field.clone(), xs.to_vec()));
    }
    if field.residue_of.is_some() {
        return None;
    }
    let base = Field::base_only(field.base);
    let ys = xs
        .iter()
        .map(|x| FieldElement::from_rational(&base, &x.as_constant()?).ok())
        .collect::<Option<Vec<_>>>()?;
    Some((base, ys))
}

fn int_of(x: &FieldElement) -> BigInt {
    SquareClass::of(x).unwrap().as_integer().unwrap()
}

/// The class of `c·{a₁,…,a_n}` in k^M_n, or `None` outside the supported fields.
pub fn milnor_mod2(field: &FieldRef, c: &BigInt, symbols: &[FieldElement]) -> Option<KBar> {
    let (field, xs) = to_base(field, symbols)?;
    let n = xs.len() as u32;
    if !c.bit(0) {
        return Some(KBar::zero(&field, n));
    }
    Some(match (n, field.base) {
        (0, _) => KBar::Bit(true),
        (1, _) => KBar::Class(SquareClass::of(&xs[0]).ok()?),
        (2, BaseField::Rationals) => {
            let (a, b) = (int_of(&xs[0]), int_of(&xs[1]));
            let classes = [SquareClass::of(&xs[0]).ok()?, SquareClass::of(&xs[1]).ok()?];
            KBar::Places(relevant_places(&classes).into_iter().filter(|&v| hilbert(&a, &b, v) == -1).collect())
        }
        (_, BaseField::Rationals | BaseField::RealModel) => KBar::Bit(xs.iter().all(|x| x.sign() == Some(-1))),
        _ => KBar::Zero,
    })
}

/// e_n(x) for x ∈ I^n, or `None` outside the supported fields.
pub fn e_n(x: &GWElement, n: u32) -> Option<KBar> {
    let field = x.field().clone();
    let entries: Vec<FieldElement> = x.positive().iter().chain(x.negative()).map(|c| c.rep().clone()).collect();
    let (base, _) = to_base(&field, &entries)?;
    let x = if field.is_function_field() {
        x.map_entries(&base, |e| FieldElement::from_rational(&base, &e.as_constant().unwrap()).map_err(Into::into))
            .ok()?
    } else {
        x.clone()
    };
    Some(match (n, base.base) {
        (0, _) => KBar::Bit(x.rank().rem_euclid(2) == 1),
        (1, _) => KBar::Class(disc(&x)),
        (2, BaseField::Rationals) => {
            let entries = x.genuine().entries;
            KBar::Places(relevant_places(&entries).into_iter().filter(|&v| clifford(&x, v) == -1).collect())
        }
        (_, BaseField::Rationals | BaseField::RealModel) => {
            let s = signature(&x)?;
            KBar::Bit((s / (1 << n)).rem_euclid(2) == 1)
        }
        _ => KBar::Zero,
    })
}
