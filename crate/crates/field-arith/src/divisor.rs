use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::element::FieldElement;
use crate::error::{FieldError, Result};
use crate::field::FieldRef;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisorMode {
    /// π is a single variable; residues substitute it by 0.
    CoordinateVariable(String),
    /// Residue-field elements are kept as ambient units.
    Symbolic,
}

/// A prime divisor `π = 0` on the affine space of a function field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeDivisor {
    pi: FieldElement,
    mode: DivisorMode,
    label: String,
}

impl PrimeDivisor {
    pub fn coordinate(field: &FieldRef, name: &str) -> Result<PrimeDivisor> {
        let pi = FieldElement::var(field, name)?;
        Ok(PrimeDivisor { pi, mode: DivisorMode::CoordinateVariable(name.into()), label: name.into() })
    }

    /// A divisor cut out by a polynomial. Irreducibility is checked for
    /// univariate π of degree at most 3 and trusted otherwise.
    pub fn symbolic(pi: FieldElement) -> Result<PrimeDivisor> {
        let poly = pi.numerator();
        if !pi.is_polynomial() || poly.as_constant().is_some() {
            return Err(FieldError::InvalidDivisor(format!("{pi} is not a non-unit polynomial")));
        }
        if !plausibly_irreducible(poly) {
            return Err(FieldError::InvalidDivisor(format!("{pi} is reducible")));
        }
        let label = pi.to_string();
        Ok(PrimeDivisor { pi, mode: DivisorMode::Symbolic, label })
    }

    pub fn with_label(mut self, label: &str) -> PrimeDivisor {
        self.label = label.into();
        self
    }

    pub fn pi(&self) -> &FieldElement {
        &self.pi
    }

    pub fn mode(&self) -> &DivisorMode {
        &self.mode
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn field(&self) -> &FieldRef {
        self.pi.field()
    }

    pub fn residue_field(&self) -> FieldRef {
        match &self.mode {
            DivisorMode::CoordinateVariable(v) => self.field().without(v).expect("divisor variable exists"),
            DivisorMode::Symbolic => self.field().residue_along(&self.label),
        }
    }

    fn strip(&self, p: &Poly) -> (i64, Poly) {
        let pi = self.pi.numerator();
        let mut p = p.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact(pi) {
            p = q;
            k += 1;
        }
        (k, p)
    }

    fn check(&self, e: &FieldElement, op: &'static str) -> Result<()> {
        if e.is_zero() {
            return Err(FieldError::ZeroInput(op));
        }
        if e.field() != self.field() {
            return Err(FieldError::FieldMismatch(e.field().to_string(), self.field().to_string()));
        }
        Ok(())
    }

    pub fn valuation(&self, e: &FieldElement) -> Result<i64> {
        self.check(e, "valuation")?;
        Ok(self.strip(e.numerator()).0 - self.strip(e.denominator()).0)
    }

    /// `u` with `e = π^ν(e) · u`.
    pub fn unit_part(&self, e: &FieldElement) -> Result<FieldElement> {
        self.check(e, "unit part")?;
        let (_, num) = self.strip(e.numerator());
        let (_, den) = self.strip(e.denominator());
        FieldElement::from_polys(e.field(), num, den)
    }

    /// Reduction of an element with ν(e) ≥ 0 to the residue field.
    pub fn specialize(&self, e: &FieldElement) -> Result<FieldElement> {
        let target = self.residue_field();
        if e.is_zero() {
            return Ok(FieldElement::zero(&target));
        }
        let v = self.valuation(e)?;
        if v < 0 {
            return Err(FieldError::NegativeValuation(v));
        }
        if v > 0 {
            return Ok(FieldElement::zero(&target));
        }
        match &self.mode {
            DivisorMode::Symbolic => Ok(e.with_field(&target)),
            DivisorMode::CoordinateVariable(name) => {
                let i = self.field().var_index(name).unwrap();
                let mut vals = vec![None; self.field().nvars()];
                vals[i] = Some(BigRational::zero());
                let index: Vec<Option<usize>> = self.field().vars.iter().map(|v| target.var_index(v)).collect();
                let down = |p: &Poly| p.partial_eval(&vals).remap(target.nvars(), &index).unwrap();
                let den = down(e.denominator());
                if den.is_zero() {
                    return Err(FieldError::Pole);
                }
                FieldElement::from_polys(&target, down(e.numerator()), den)
            }
        }
    }
}

fn plausibly_irreducible(p: &Poly) -> bool {
    let vars = p.variables();
    if vars.len() != 1 {
        return true;
    }
    let v = vars[0];
    let deg = p.degree_in(v);
    if deg == 1 {
        return true;
    }
    let sqfree = p.gcd(&p.derivative(v)).as_constant().is_some();
    if !sqfree && p.characteristic() == 0 {
        return false;
    }
    if deg > 3 {
        return true;
    }
    let coeffs: Vec<BigRational> = p
        .to_univariate(v)
        .iter()
        .map(|c| c.as_constant().unwrap())
        .collect();
    let eval = |x: &BigRational| -> BigRational {
        coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    };
    let ch = p.characteristic();
    if ch > 0 {
        return (0..ch).all(|x| !crate::poly::reduce_coeff(ch, eval(&BigRational::from_integer(x.into()))).is_zero());
    }
    // Rational root test on the integer-scaled polynomial.
    let lcm = coeffs.iter().fold(BigInt::from(1), |l, c| num_integer::Integer::lcm(&l, c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::from(1);
        while d <= n {
            if (&n % &d).is_zero() {
                out.push(d.clone());
            }
            d += 1;
        }
        out
    };
    if ints[0].is_zero() {
        return false;
    }
    for a in divisors(&ints[0]) {
        for b in divisors(ints.last().unwrap()) {
            for s in [a.clone(), -a.clone()] {
                if eval(&BigRational::new(s, b.clone())).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
