use std::collections::BTreeMap;
use std::fmt;

use field_arith::{BaseField, Field, FieldElement, FieldRef};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use qf_gw::{e_n, milnor_mod2, prime_factors, Decision, GWElement, KBar};

use crate::error::Result;
use crate::eval::pfister_sum;
use crate::expr::MWExpr;

/// A ℤ-linear combination of Milnor symbols {a₁,…,a_n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorExpr {
    pub field: FieldRef,
    pub degree: i64,
    pub terms: BTreeMap<Vec<FieldElement>, i64>,
}

impl fmt::Display for MilnorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| {
                let body: Vec<String> = s.iter().map(|a| a.to_string()).collect();
                let sym = format!("{{{}}}", body.join(","));
                match (c, s.is_empty()) {
                    (c, true) => c.to_string(),
                    (1, _) => sym,
                    (-1, _) => format!("-{sym}"),
                    (c, _) => format!("{c}*{sym}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The images of an expression in the cartesian square
/// K^MW_n → K^M_n, K^MW_n → I^n, both mapping to k^M_n.
#[derive(Clone, Debug)]
pub struct CartesianImage {
    pub degree: i64,
    /// η ↦ 0.
    pub milnor: MilnorExpr,
    /// [u] ↦ ⟨u⟩ − 1, η ↦ 1; a representative in GW of a class of Iⁿ ⊂ W.
    pub witt: GWElement,
    /// The Milnor image reduced mod 2.
    pub milnor_mod2: Option<KBar>,
    /// e_n of the Witt image.
    pub witt_mod2: Option<KBar>,
    /// Whether the two composites to k^M_n agree; `None` when not computable.
    pub commutes: Option<bool>,
}

fn mod2_base(field: &FieldRef) -> FieldRef {
    if field.is_function_field() {
        Field::base_only(field.base)
    } else {
        field.clone()
    }
}

pub fn project(x: &MWExpr) -> Result<CartesianImage> {
    let degree = x.degree()?.unwrap_or(0);
    let field = x.field().clone();
    let mut terms = BTreeMap::new();
    for (w, c) in x.terms() {
        if w.eta == 0 {
            *terms.entry(w.symbols.clone()).or_insert(0) += c;
        }
    }
    terms.retain(|_, c| *c != 0);
    let milnor = MilnorExpr { field: field.clone(), degree, terms };
    let witt = pfister_sum(x)?;
    let (milnor_mod2, witt_mod2) = if degree < 0 {
        (Some(KBar::Zero), Some(KBar::Zero))
    } else {
        let n = degree as u32;
        let mut acc = Some(KBar::zero(&mod2_base(&field), n));
        for (s, c) in &milnor.terms {
            acc = match (acc, milnor_mod2(&field, &BigInt::from(*c), s)) {
                (Some(a), Some(b)) => Some(a.add(&b)),
                _ => None,
            };
        }
        (acc, e_n(&witt, n))
    };
    let commutes = match (&milnor_mod2, &witt_mod2) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    Ok(CartesianImage { degree, milnor, witt, milnor_mod2, witt_mod2, commutes })
}

/// Decides whether a Milnor expression vanishes in K^M_n(F).
///
/// Complete for n ≤ 1 on every field, for 𝔽_p and ℚ in all degrees, and for
/// function fields whose symbols are all constants; otherwise `Undecided`.
pub fn milnor_zero(m: &MilnorExpr) -> Decision {
    if m.terms.is_empty() || m.degree < 0 {
        return Decision::Equal;
    }
    if m.degree == 0 {
        return Decision::from_bool(m.terms.values().sum::<i64>() == 0);
    }
    let field = &m.field;
    if m.degree == 1 {
        let mut prod = FieldElement::one(field);
        for (s, &c) in &m.terms {
            prod = prod.mul(&s[0].pow(c).expect("nonzero symbol"));
        }
        return Decision::from_bool(prod.is_one());
    }
    if field.is_function_field() {
        let base = Field::base_only(field.base);
        let mut terms = BTreeMap::new();
        for (s, &c) in &m.terms {
            let Some(t) = s
                .iter()
                .map(|a| a.as_constant().and_then(|q| FieldElement::from_rational(&base, &q).ok()))
                .collect::<Option<Vec<_>>>()
            else {
                return Decision::Undecided;
            };
            *terms.entry(t).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        return milnor_zero(&MilnorExpr { field: base, degree: m.degree, terms });
    }
    match field.base {
        BaseField::Prime(_) => Decision::Equal,
        BaseField::Rationals => rational_zero(m),
        _ => Decision::Undecided,
    }
}

fn constant(a: &FieldElement) -> BigRational {
    a.as_constant().expect("constant field")
}

fn all_negative(s: &[FieldElement]) -> bool {
    s.iter().all(|a| a.sign() == Some(-1))
}

/// K^M_2(ℚ) ≅ ℤ/2 ⊕ ⊕_{p odd} 𝔽_p^* via the real symbol and tame symbols;
/// K^M_n(ℚ) ≅ ℤ/2 for n ≥ 3, detected by signs.
fn rational_zero(m: &MilnorExpr) -> Decision {
    let real: i64 = m.terms.iter().filter(|(s, _)| all_negative(s)).map(|(_, c)| c).sum();
    if real.rem_euclid(2) != 0 {
        return Decision::NotEqual;
    }
    if m.degree >= 3 {
        return Decision::Equal;
    }
    let mut primes = vec![];
    for s in m.terms.keys() {
        for a in s {
            let q = constant(a);
            for n in [q.numer(), q.denom()] {
                for p in prime_factors(n) {
                    if p != 2 && !primes.contains(&p) {
                        primes.push(p);
                    }
                }
            }
        }
    }
    for p in primes {
        let p = BigInt::from(p);
        let mut acc = BigInt::one();
        for (s, &c) in &m.terms {
            let t = tame(&constant(&s[0]), &constant(&s[1]), &p);
            let e = BigInt::from(c).mod_floor(&(&p - 1u32));
            acc = acc * t.modpow(&e, &p) % &p;
        }
        if !acc.is_one() {
            return Decision::NotEqual;
        }
    }
    Decision::Equal
}

fn valuation(q: &BigRational, p: &BigInt) -> (i64, BigInt, BigInt) {
    let (mut n, mut d) = (q.numer().clone(), q.denom().clone());
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    while (&d % p).is_zero() {
        d /= p;
        v -= 1;
    }
    (v, n, d)
}

/// The tame symbol (−1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} mod p.
fn tame(a: &BigRational, b: &BigRational, p: &BigInt) -> BigInt {
    let (va, na, da) = valuation(a, p);
    let (vb, nb, db) = valuation(b, p);
    let unit = |n: &BigInt, d: &BigInt| -> BigInt {
        let inv = d.mod_floor(p).modpow(&(p - 2u32), p);
        (n.mod_floor(p) * inv) % p
    };
    let (ua, ub) = (unit(&na, &da), unit(&nb, &db));
    let pow = |x: &BigInt, e: i64| -> BigInt {
        let x = if e < 0 { x.modpow(&(p - 2u32), p) } else { x.clone() };
        x.modpow(&BigInt::from(e.unsigned_abs()), p)
    };
    // a = p^va·ua, b = p^vb·ub: the p-powers cancel in a^vb / b^va.
    let mut t = pow(&ua, vb) * pow(&ub, -va) % p;
    if (va * vb).rem_euclid(2) == 1 {
        t = (p - t) % p;
    }
    if t.is_negative() {
        t += p;
    }
    t
}
