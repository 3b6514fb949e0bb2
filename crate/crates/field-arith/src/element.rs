use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{FieldError, Result};
use crate::field::FieldRef;
use crate::poly::{inv_coeff, Poly};

/// A reduced fraction `num / den` whose denominator has leading coefficient 1.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: FieldRef,
    num: Poly,
    den: Poly,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for FieldElement {}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        let same = Arc::ptr_eq(&self.field, &other.field) || self.field == other.field;
        (if same { Ordering::Equal } else { self.field.cmp(&other.field) })
            .then_with(|| self.num.cmp(&other.num))
            .then_with(|| self.den.cmp(&other.den))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl FieldElement {
    /// Builds `num / den` in lowest terms.
    pub fn from_polys(field: &FieldRef, num: Poly, den: Poly) -> Result<FieldElement> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(FieldElement { field: field.clone(), num, den }.normalize())
    }

    pub fn from_poly(field: &FieldRef, num: Poly) -> FieldElement {
        let den = Poly::one(field.characteristic(), field.nvars());
        FieldElement { field: field.clone(), num, den }
    }

    pub fn zero(field: &FieldRef) -> FieldElement {
        FieldElement::from_poly(field, Poly::zero(field.characteristic(), field.nvars()))
    }

    pub fn one(field: &FieldRef) -> FieldElement {
        FieldElement::int(field, 1)
    }

    pub fn int(field: &FieldRef, n: i64) -> FieldElement {
        FieldElement::from_integer(field, BigInt::from(n))
    }

    pub fn from_integer(field: &FieldRef, n: BigInt) -> FieldElement {
        let p = Poly::constant(field.characteristic(), field.nvars(), BigRational::from_integer(n));
        FieldElement::from_poly(field, p)
    }

    /// A constant; in characteristic p the denominator must be prime to p.
    pub fn constant(field: &FieldRef, c: &BigRational) -> FieldElement {
        FieldElement::from_poly(field, Poly::constant(field.characteristic(), field.nvars(), c.clone()))
    }

    pub fn from_rational(field: &FieldRef, q: &BigRational) -> Result<FieldElement> {
        FieldElement::from_integer(field, q.numer().clone())
            .div(&FieldElement::from_integer(field, q.denom().clone()))
    }

    pub fn var(field: &FieldRef, name: &str) -> Result<FieldElement> {
        let i = field.var_index(name).ok_or_else(|| FieldError::UnknownVariable(name.into()))?;
        Ok(FieldElement::from_poly(field, Poly::var(field.characteristic(), field.nvars(), i)))
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// Returns the canonical representative. Construction already
    /// normalizes, so this is the identity on values built by this crate.
    pub fn normalize(&self) -> FieldElement {
        let g = self.num.gcd(&self.den);
        let (mut num, mut den) = if g.is_zero() || g.is_one() {
            (self.num.clone(), self.den.clone())
        } else {
            (self.num.div_exact(&g).unwrap(), self.den.div_exact(&g).unwrap())
        };
        if num.is_zero() {
            den = Poly::one(den.characteristic(), den.nvars());
        }
        let lc = inv_coeff(den.characteristic(), &den.leading_coeff());
        num = num.scale(&lc);
        den = den.scale(&lc);
        FieldElement { field: self.field.clone(), num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value if the element is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        Some(self.num.as_constant()? / self.den.as_constant()?)
    }

    /// A square root in characteristic 0, if one exists in the field.
    pub fn sqrt(&self) -> Option<FieldElement> {
        let (n, d) = (self.num.sqrt()?, self.den.sqrt()?);
        FieldElement::from_polys(&self.field, n, d).ok()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(self.field.to_string(), other.field.to_string()))
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let g = self.den.gcd(&other.den);
        let (d1, d2) = (self.den.div_exact(&g).unwrap(), other.den.div_exact(&g).unwrap());
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        let h = num.gcd(&g);
        let (num, g) = (num.div_exact(&h).unwrap(), g.div_exact(&h).unwrap());
        Ok(self.reduced(num, d1.mul(&d2).mul(&g)))
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let q = |a: &Poly, b: &Poly| a.div_exact(b).unwrap();
        let num = q(&self.num, &g1).mul(&q(&other.num, &g2));
        let den = q(&self.den, &g2).mul(&q(&other.den, &g1));
        Ok(self.reduced(num, den))
    }

    /// Wraps an already coprime pair, fixing the denominator's leading coefficient.
    fn reduced(&self, num: Poly, den: Poly) -> FieldElement {
        let den = if num.is_zero() { Poly::one(den.characteristic(), den.nvars()) } else { den };
        let lc = inv_coeff(den.characteristic(), &den.leading_coeff());
        FieldElement { field: self.field.clone(), num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { field: self.field.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.try_add(other).expect("field mismatch")
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.try_mul(other).expect("field mismatch")
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(self.reduced(base.num.pow(k), base.den.pow(k)))
    }

    /// Sign of a nonzero constant in characteristic 0.
    pub fn sign(&self) -> Option<i32> {
        if self.field.characteristic() != 0 {
            return None;
        }
        let c = self.as_constant()?;
        (!c.is_zero()).then(|| if c.is_positive() { 1 } else { -1 })
    }

    /// Substitutes variables by elements of `target`. Variables without an
    /// image map to the variable of the same name in `target`.
    pub fn substitute(&self, target: &FieldRef, images: &BTreeMap<String, FieldElement>) -> Result<FieldElement> {
        if target.characteristic() != self.field.characteristic() {
            return Err(FieldError::FieldMismatch(self.field.to_string(), target.to_string()));
        }
        let mut vals = Vec::new();
        for v in &self.field.vars {
            let e = match images.get(v) {
                Some(e) => {
                    e.same_field(&FieldElement::zero(target))?;
                    e.clone()
                }
                None => FieldElement::var(target, v)?,
            };
            vals.push(e);
        }
        let eval = |p: &Poly| -> Result<FieldElement> {
            let mut acc = FieldElement::zero(target);
            for (m, c) in p.terms() {
                let mut t = FieldElement::from_rational(target, c)?;
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        t = t.mul(&vals[i].pow(e as i64)?);
                    }
                }
                acc = acc.add(&t);
            }
            Ok(acc)
        };
        let den = eval(&self.den)?;
        if den.is_zero() {
            return Err(FieldError::Pole);
        }
        eval(&self.num)?.div(&den)
    }

    /// The same fraction viewed in another field with compatible variables.
    pub fn transport(&self, target: &FieldRef) -> Result<FieldElement> {
        if target.characteristic() != self.field.characteristic() {
            return Err(FieldError::FieldMismatch(self.field.to_string(), target.to_string()));
        }
        let index: Vec<Option<usize>> = self.field.vars.iter().map(|v| target.var_index(v)).collect();
        let mv = |p: &Poly| {
            p.remap(target.nvars(), &index).ok_or_else(|| {
                FieldError::FieldMismatch(self.field.to_string(), target.to_string())
            })
        };
        FieldElement::from_polys(target, mv(&self.num)?, mv(&self.den)?)
    }

    pub(crate) fn with_field(&self, field: &FieldRef) -> FieldElement {
        FieldElement { field: field.clone(), num: self.num.clone(), den: self.den.clone() }
    }
}

fn single_factor(p: &Poly) -> bool {
    p.num_terms() == 1 && {
        let (m, c) = p.leading().unwrap();
        c.is_one() && m.0.iter().filter(|&&e| e > 0).count() <= 1
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = &self.field.vars;
        let num = self.num.display(names).to_string();
        if self.den.is_one() {
            return write!(f, "{num}");
        }
        if self.num.num_terms() > 1 {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if single_factor(&self.den) {
            write!(f, "/{}", self.den.display(names))
        } else {
            write!(f, "/({})", self.den.display(names))
        }
    }
}

impl FieldElement {
    pub fn parse(field: &FieldRef, s: &str) -> Result<FieldElement> {
        crate::parse::parse_element(field, s)
    }
}
