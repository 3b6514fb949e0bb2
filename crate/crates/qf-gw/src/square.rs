use std::fmt;

use field_arith::{constant_class, square_class, FieldElement, FieldRef};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{GwError, Result};

/// A square class, stored by its canonical representative. Classes sort
/// with 1 first and the class of -1 second.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareClass {
    tag: u8,
    rep: FieldElement,
}

impl SquareClass {
    pub fn of(e: &FieldElement) -> Result<SquareClass> {
        if e.is_zero() {
            return Err(GwError::ZeroEntry);
        }
        let base = e.field().base;
        let minus = constant_class(base, &-BigRational::one());
        if let Some(c) = e.as_constant() {
            let k = constant_class(base, &c);
            let tag = if k.is_one() {
                0
            } else if k == minus {
                1
            } else {
                2
            };
            let rep = FieldElement::constant(e.field(), &k);
            return Ok(SquareClass { tag, rep });
        }
        let rep = square_class(e)?;
        let tag = match rep.as_constant() {
            Some(k) if k.is_one() => 0,
            Some(k) if k == minus => 1,
            _ => 2,
        };
        Ok(SquareClass { tag, rep })
    }

    pub fn int(field: &FieldRef, n: i64) -> Result<SquareClass> {
        SquareClass::of(&FieldElement::int(field, n))
    }

    pub fn one(field: &FieldRef) -> SquareClass {
        SquareClass::int(field, 1).unwrap()
    }

    pub fn minus_one(field: &FieldRef) -> SquareClass {
        SquareClass::int(field, -1).unwrap()
    }

    pub fn rep(&self) -> &FieldElement {
        &self.rep
    }

    pub fn field(&self) -> &FieldRef {
        self.rep.field()
    }

    pub fn is_one(&self) -> bool {
        self.tag == 0
    }

    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        SquareClass::of(&self.rep.mul(&other.rep)).unwrap()
    }

    pub fn neg(&self) -> SquareClass {
        SquareClass::of(&self.rep.neg()).unwrap()
    }

    /// Sign in characteristic 0 when the representative is constant.
    pub fn sign(&self) -> Option<i32> {
        self.rep.sign()
    }

    /// The squarefree integer representing a constant class in characteristic 0,
    /// or the residue representing a class of a prime field.
    pub fn as_integer(&self) -> Option<BigInt> {
        let c = self.rep.as_constant()?;
        c.is_integer().then(|| c.to_integer())
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}
