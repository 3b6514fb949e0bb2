use std::fmt;
use std::sync::Arc;

use field_arith::{FieldElement, FieldRef};

use crate::error::{GwError, Result};
use crate::square::SquareClass;

/// A nondegenerate diagonal form ⟨a₁,…,a_n⟩.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForm {
    pub field: FieldRef,
    pub entries: Vec<SquareClass>,
}

impl DiagonalForm {
    pub fn new(field: &FieldRef, entries: &[FieldElement]) -> Result<DiagonalForm> {
        let entries = entries.iter().map(SquareClass::of).collect::<Result<Vec<_>>>()?;
        Ok(DiagonalForm { field: field.clone(), entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn det(&self) -> SquareClass {
        self.entries.iter().fold(SquareClass::one(&self.field), |d, e| d.mul(e))
    }

    pub fn negate(&self) -> DiagonalForm {
        DiagonalForm { field: self.field.clone(), entries: self.entries.iter().map(SquareClass::neg).collect() }
    }

    pub fn orthogonal_sum(&self, other: &DiagonalForm) -> DiagonalForm {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        DiagonalForm { field: self.field.clone(), entries }
    }
}

/// An element `pos − neg` of the Grothendieck-Witt ring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GWElement {
    field: FieldRef,
    pos: Vec<SquareClass>,
    neg: Vec<SquareClass>,
}

impl GWElement {
    pub fn new(field: &FieldRef, pos: Vec<SquareClass>, neg: Vec<SquareClass>) -> GWElement {
        GWElement { field: field.clone(), pos, neg }.canonical()
    }

    pub fn zero(field: &FieldRef) -> GWElement {
        GWElement::new(field, vec![], vec![])
    }

    pub fn one(field: &FieldRef) -> GWElement {
        GWElement::new(field, vec![SquareClass::one(field)], vec![])
    }

    /// ⟨a⟩.
    pub fn unit(a: &FieldElement) -> Result<GWElement> {
        Ok(GWElement::new(a.field(), vec![SquareClass::of(a)?], vec![]))
    }

    pub fn class(c: &SquareClass) -> GWElement {
        GWElement::new(c.field(), vec![c.clone()], vec![])
    }

    pub fn diagonal(field: &FieldRef, entries: &[FieldElement]) -> Result<GWElement> {
        Ok(GWElement::from_form(&DiagonalForm::new(field, entries)?))
    }

    pub fn from_form(f: &DiagonalForm) -> GWElement {
        GWElement::new(&f.field, f.entries.clone(), vec![])
    }

    /// The hyperbolic form h = ⟨1,−1⟩.
    pub fn hyperbolic(field: &FieldRef) -> GWElement {
        GWElement::new(field, vec![SquareClass::one(field), SquareClass::minus_one(field)], vec![])
    }

    pub fn integer(field: &FieldRef, n: i64) -> GWElement {
        GWElement::one(field).scale(n)
    }

    /// The Pfister form ⟨⟨u⟩⟩ = ⟨1,−u⟩.
    pub fn pfister(u: &FieldElement) -> Result<GWElement> {
        GWElement::diagonal(u.field(), &[FieldElement::one(u.field()), u.neg()])
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn positive(&self) -> &[SquareClass] {
        &self.pos
    }

    pub fn negative(&self) -> &[SquareClass] {
        &self.neg
    }

    pub fn positive_form(&self) -> DiagonalForm {
        DiagonalForm { field: self.field.clone(), entries: self.pos.clone() }
    }

    pub fn negative_form(&self) -> DiagonalForm {
        DiagonalForm { field: self.field.clone(), entries: self.neg.clone() }
    }

    /// The genuine form `pos ⊥ −neg`, equal to `self + |neg|·h`.
    pub fn genuine(&self) -> DiagonalForm {
        self.positive_form().orthogonal_sum(&self.negative_form().negate())
    }

    pub fn is_zero(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty()
    }

    pub fn rank(&self) -> i64 {
        self.pos.len() as i64 - self.neg.len() as i64
    }

    fn canonical(mut self) -> GWElement {
        let one = SquareClass::one(&self.field);
        let minus = SquareClass::minus_one(&self.field);
        loop {
            self.pos.sort();
            self.neg.sort();
            let mut changed = cancel(&mut self.pos, &mut self.neg);
            for side in [&mut self.pos, &mut self.neg] {
                changed |= split_hyperbolic(side, &one, &minus);
            }
            if !changed {
                return self;
            }
        }
    }

    fn same_field(&self, other: &GWElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(GwError::FieldMismatch(self.field.to_string(), other.field.to_string()))
        }
    }

    pub fn try_add(&self, other: &GWElement) -> Result<GWElement> {
        self.same_field(other)?;
        let mut pos = self.pos.clone();
        pos.extend(other.pos.iter().cloned());
        let mut neg = self.neg.clone();
        neg.extend(other.neg.iter().cloned());
        Ok(GWElement::new(&self.field, pos, neg))
    }

    pub fn try_mul(&self, other: &GWElement) -> Result<GWElement> {
        self.same_field(other)?;
        let prod = |xs: &[SquareClass], ys: &[SquareClass]| -> Vec<SquareClass> {
            xs.iter().flat_map(|x| ys.iter().map(move |y| x.mul(y))).collect()
        };
        let mut pos = prod(&self.pos, &other.pos);
        pos.extend(prod(&self.neg, &other.neg));
        let mut neg = prod(&self.pos, &other.neg);
        neg.extend(prod(&self.neg, &other.pos));
        Ok(GWElement::new(&self.field, pos, neg))
    }

    pub fn add(&self, other: &GWElement) -> GWElement {
        self.try_add(other).expect("field mismatch")
    }

    pub fn sub(&self, other: &GWElement) -> GWElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &GWElement) -> GWElement {
        self.try_mul(other).expect("field mismatch")
    }

    pub fn neg(&self) -> GWElement {
        GWElement { field: self.field.clone(), pos: self.neg.clone(), neg: self.pos.clone() }
    }

    pub fn scale(&self, n: i64) -> GWElement {
        let base = if n < 0 { self.neg() } else { self.clone() };
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for _ in 0..n.unsigned_abs() {
            pos.extend(base.pos.iter().cloned());
            neg.extend(base.neg.iter().cloned());
        }
        GWElement::new(&self.field, pos, neg)
    }

    /// Multiplication by ⟨u⟩.
    pub fn twist(&self, u: &SquareClass) -> GWElement {
        let m = |xs: &[SquareClass]| xs.iter().map(|x| x.mul(u)).collect();
        GWElement::new(&self.field, m(&self.pos), m(&self.neg))
    }

    /// Moves the element to another field through a map on representatives.
    pub fn map_entries(
        &self,
        field: &FieldRef,
        f: impl Fn(&FieldElement) -> Result<FieldElement>,
    ) -> Result<GWElement> {
        let m = |xs: &[SquareClass]| -> Result<Vec<SquareClass>> {
            xs.iter().map(|x| SquareClass::of(&f(x.rep())?)).collect()
        };
        Ok(GWElement::new(field, m(&self.pos)?, m(&self.neg)?))
    }
}

/// Removes entries common to both sides.
fn cancel(pos: &mut Vec<SquareClass>, neg: &mut Vec<SquareClass>) -> bool {
    let mut changed = false;
    let mut i = 0;
    while i < pos.len() {
        if let Some(j) = neg.iter().position(|n| *n == pos[i]) {
            pos.remove(i);
            neg.remove(j);
            changed = true;
        } else {
            i += 1;
        }
    }
    changed
}

/// Rewrites ⟨a⟩ + ⟨−a⟩ as ⟨1⟩ + ⟨−1⟩ for `a` outside {1, −1}.
fn split_hyperbolic(side: &mut [SquareClass], one: &SquareClass, minus: &SquareClass) -> bool {
    for i in 0..side.len() {
        if side[i] == *one || side[i] == *minus {
            continue;
        }
        let target = side[i].neg();
        if let Some(j) = (0..side.len()).find(|&j| j != i && side[j] == target) {
            side[i] = one.clone();
            side[j] = minus.clone();
            return true;
        }
    }
    false
}

fn write_side(f: &mut fmt::Formatter<'_>, xs: &[SquareClass]) -> fmt::Result {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    write!(f, "<{}>", parts.join(","))
}

impl fmt::Display for GWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.pos.is_empty(), self.neg.is_empty()) {
            (true, true) => write!(f, "0"),
            (false, true) => write_side(f, &self.pos),
            (true, false) => {
                write!(f, "-")?;
                write_side(f, &self.neg)
            }
            (false, false) => {
                write_side(f, &self.pos)?;
                write!(f, " - ")?;
                write_side(f, &self.neg)
            }
        }
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_side(f, &self.entries)
    }
}
