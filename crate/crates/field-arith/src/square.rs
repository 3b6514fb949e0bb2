use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::element::FieldElement;
use crate::error::{FieldError, Result};
use crate::field::BaseField;

/// Squarefree part of a nonzero integer, keeping the sign.
pub fn squarefree_part(n: &BigInt) -> BigInt {
    assert!(!n.is_zero());
    let mut m = n.abs();
    let mut out = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        let mut e = 0;
        while m.is_multiple_of(&d) {
            m /= &d;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &d;
        }
        d += 1;
    }
    out *= m;
    if n.is_negative() {
        -out
    } else {
        out
    }
}

/// Legendre symbol (a / p) for an odd prime p, 0 when p | a.
pub fn legendre(a: &BigInt, p: u64) -> i32 {
    let m = BigInt::from(p);
    let a = a.mod_floor(&m);
    if a.is_zero() {
        return 0;
    }
    if a.modpow(&BigInt::from((p - 1) / 2), &m).is_one() {
        1
    } else {
        -1
    }
}

/// Least quadratic nonresidue modulo p.
pub fn least_nonresidue(p: u64) -> u64 {
    (2..p).find(|&a| legendre(&BigInt::from(a), p) == -1).unwrap()
}

/// Canonical square-class representative of a nonzero constant.
pub fn constant_class(base: BaseField, c: &BigRational) -> BigRational {
    let int = |n: BigInt| BigRational::from_integer(n);
    match base {
        BaseField::Rationals => int(squarefree_part(&(c.numer() * c.denom()))),
        BaseField::RealModel => int(BigInt::from(if c.is_negative() { -1 } else { 1 })),
        BaseField::ComplexModel => BigRational::one(),
        BaseField::Prime(p) => {
            if legendre(c.numer(), p) == 1 {
                BigRational::one()
            } else {
                int(BigInt::from(least_nonresidue(p)))
            }
        }
    }
}

/// Canonical representative of the square class of `e`.
///
/// Over a function field the representative is a constant class times the
/// product of the irreducible factors of odd multiplicity in `num·den`.
pub fn square_class(e: &FieldElement) -> Result<FieldElement> {
    if e.is_zero() {
        return Err(FieldError::ZeroInput("square class"));
    }
    let field = e.field();
    let prod = e.numerator().mul(e.denominator());
    let c = prod.leading_coeff();
    let k = constant_class(field.base, &c);
    let odd = if prod.as_constant().is_some() { prod.monic() } else { prod.scale(&c.recip()).odd_part() };
    let rep = odd.scale(&k);
    Ok(FieldElement::from_poly(field, rep))
}

pub fn is_square(e: &FieldElement) -> Result<bool> {
    Ok(square_class(e)?.is_one())
}

/// Same square class.
pub fn same_class(a: &FieldElement, b: &FieldElement) -> Result<bool> {
    Ok(square_class(a)? == square_class(b)?)
}
