use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use field_arith::{FieldElement, FieldRef};

use crate::error::{MwError, Result};

/// η^eta [a₁,…,a_n].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    pub eta: u32,
    pub symbols: Vec<FieldElement>,
}

impl Word {
    pub fn new(eta: u32, symbols: Vec<FieldElement>) -> Result<Word> {
        if symbols.iter().any(|a| a.is_zero()) {
            return Err(MwError::ZeroSymbol);
        }
        Ok(Word { eta, symbols })
    }

    pub fn one() -> Word {
        Word { eta: 0, symbols: vec![] }
    }

    pub fn degree(&self) -> i64 {
        self.symbols.len() as i64 - self.eta as i64
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend(other.symbols.iter().cloned());
        Word { eta: self.eta + other.eta, symbols }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        match self.eta {
            0 => {}
            1 => parts.push("eta".to_string()),
            k => parts.push(format!("eta^{k}")),
        }
        if !self.symbols.is_empty() {
            let s: Vec<String> = self.symbols.iter().map(|a| a.to_string()).collect();
            parts.push(format!("[{}]", s.join(",")));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A ℤ-linear combination of words in K^MW_*(F).
#[derive(Clone, Debug)]
pub struct MWExpr {
    field: FieldRef,
    terms: BTreeMap<Word, i64>,
}

impl PartialEq for MWExpr {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field) && self.terms == other.terms
    }
}

impl Eq for MWExpr {}

impl MWExpr {
    pub fn zero(field: &FieldRef) -> MWExpr {
        MWExpr { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn from_terms(field: &FieldRef, terms: impl IntoIterator<Item = (Word, i64)>) -> MWExpr {
        let mut x = MWExpr::zero(field);
        for (w, c) in terms {
            x.add_term(w, c);
        }
        x
    }

    pub fn word(field: &FieldRef, w: Word) -> MWExpr {
        MWExpr::from_terms(field, [(w, 1)])
    }

    pub fn integer(field: &FieldRef, n: i64) -> MWExpr {
        MWExpr::from_terms(field, [(Word::one(), n)])
    }

    pub fn one(field: &FieldRef) -> MWExpr {
        MWExpr::integer(field, 1)
    }

    pub fn eta(field: &FieldRef, k: u32) -> MWExpr {
        MWExpr::word(field, Word { eta: k, symbols: vec![] })
    }

    /// The symbol [a₁,…,a_n].
    pub fn symbol(symbols: &[FieldElement]) -> Result<MWExpr> {
        let field = symbols.first().map(|a| a.field().clone()).ok_or(MwError::ZeroSymbol)?;
        Ok(MWExpr::word(&field, Word::new(0, symbols.to_vec())?))
    }

    /// ⟨a⟩ = 1 + η[a].
    pub fn unit_form(a: &FieldElement) -> Result<MWExpr> {
        let f = a.field();
        Ok(MWExpr::from_terms(f, [(Word::one(), 1), (Word::new(1, vec![a.clone()])?, 1)]))
    }

    /// h = 2 + η[−1].
    pub fn hyperbolic(field: &FieldRef) -> MWExpr {
        let m1 = FieldElement::int(field, -1);
        MWExpr::from_terms(field, [(Word::one(), 2), (Word { eta: 1, symbols: vec![m1] }, 1)])
    }

    /// ε = −⟨−1⟩.
    pub fn epsilon(field: &FieldRef) -> MWExpr {
        MWExpr::unit_form(&FieldElement::int(field, -1)).unwrap().neg()
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no terms remain (syntactic zero).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// The common degree of all terms; `None` for the zero expression.
    pub fn degree(&self) -> Result<Option<i64>> {
        let mut d = None;
        for w in self.terms.keys() {
            match d {
                None => d = Some(w.degree()),
                Some(e) if e != w.degree() => return Err(MwError::MixedDegree(e, w.degree())),
                _ => {}
            }
        }
        Ok(d)
    }

    fn check(&self, other: &MWExpr) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(MwError::FieldMismatch(self.field.to_string(), other.field.to_string()))
        }
    }

    pub fn try_add(&self, other: &MWExpr) -> Result<MWExpr> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    /// Product with words concatenated in the given order.
    pub fn try_mul(&self, other: &MWExpr) -> Result<MWExpr> {
        self.check(other)?;
        let mut out = MWExpr::zero(&self.field);
        for (a, &c) in &self.terms {
            for (b, &d) in &other.terms {
                out.add_term(a.concat(b), c * d);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &MWExpr) -> MWExpr {
        self.try_add(other).expect("field mismatch")
    }

    pub fn sub(&self, other: &MWExpr) -> MWExpr {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MWExpr) -> MWExpr {
        self.try_mul(other).expect("field mismatch")
    }

    pub fn neg(&self) -> MWExpr {
        self.scale(-1)
    }

    pub fn scale(&self, n: i64) -> MWExpr {
        MWExpr::from_terms(&self.field, self.terms.iter().map(|(w, &c)| (w.clone(), c * n)))
    }

    pub fn pow(&self, k: u32) -> MWExpr {
        (0..k).fold(MWExpr::one(&self.field), |acc, _| acc.mul(self))
    }

    /// Applies `f` to every symbol entry, moving the expression to `field`.
    pub fn map_symbols(
        &self,
        field: &FieldRef,
        mut f: impl FnMut(&FieldElement) -> Result<FieldElement>,
    ) -> Result<MWExpr> {
        let mut out = MWExpr::zero(field);
        for (w, &c) in &self.terms {
            let symbols = w.symbols.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
            out.add_term(Word::new(w.eta, symbols)?, c);
        }
        Ok(out)
    }
}

impl fmt::Display for MWExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, &c)) in self.terms.iter().enumerate() {
            let (sign, a) = if c < 0 { ("-", -c) } else { ("+", c) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let bare = w.eta == 0 && w.symbols.is_empty();
            match (a, bare) {
                (_, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{w}")?,
                _ => write!(f, "{a}*{w}")?,
            }
        }
        Ok(())
    }
}
