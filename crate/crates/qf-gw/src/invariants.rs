use std::collections::BTreeSet;
use std::fmt;

use field_arith::{legendre, BaseField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::form::{DiagonalForm, GWElement};
use crate::square::SquareClass;

/// A place of ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Prime(u64),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// Prime factors of a nonzero integer by trial division.
pub fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= m {
        if (&m % d).is_zero() {
            out.push(d);
            while (&m % d).is_zero() {
                m /= d;
            }
        }
        d += 1;
    }
    if m > BigInt::one() {
        out.push(m.to_u64().expect("prime factor fits in u64"));
    }
    out
}

fn split(a: &BigInt, p: u64) -> (u32, BigInt) {
    let mut a = a.clone();
    let mut k = 0;
    while (&a % p).is_zero() {
        a /= p;
        k += 1;
    }
    (k, a)
}

/// Hilbert symbol (a, b)_v of nonzero integers.
pub fn hilbert(a: &BigInt, b: &BigInt, v: Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero());
    match v {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (al, u) = split(a, 2);
            let (be, w) = split(b, 2);
            let m8 = |x: &BigInt| x.mod_floor(&BigInt::from(8)).to_u32().unwrap();
            let eps = |x: &BigInt| u32::from(m8(x) % 4 == 3);
            let omega = |x: &BigInt| u32::from(matches!(m8(x), 3 | 5));
            let e = eps(&u) * eps(&w) + al * omega(&w) + be * omega(&u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (al, u) = split(a, p);
            let (be, w) = split(b, p);
            let mut s = if (al * be) % 2 == 1 && p % 4 == 3 { -1 } else { 1 };
            if be % 2 == 1 {
                s *= legendre(&u, p);
            }
            if al % 2 == 1 {
                s *= legendre(&w, p);
            }
            s
        }
    }
}

fn class_int(c: &SquareClass) -> BigInt {
    c.as_integer().expect("constant rational square class")
}

/// Places where an invariant of forms with these entries can be nontrivial.
pub fn relevant_places<'a>(entries: impl IntoIterator<Item = &'a SquareClass>) -> BTreeSet<Place> {
    let mut out: BTreeSet<Place> = [Place::Real, Place::Prime(2)].into();
    for e in entries {
        out.extend(prime_factors(&class_int(e)).into_iter().map(Place::Prime));
    }
    out
}

/// Hasse invariant ∏_{i<j} (a_i, a_j)_v of a diagonal form over ℚ.
pub fn hasse(f: &DiagonalForm, v: Place) -> i32 {
    let xs: Vec<BigInt> = f.entries.iter().map(class_int).collect();
    let mut s = 1;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            s *= hilbert(&xs[i], &xs[j], v);
        }
    }
    s
}

/// Clifford invariant at `v` of an element of I² over ℚ, through its
/// genuine representative of rank 2m with trivial discriminant.
pub fn clifford(x: &GWElement, v: Place) -> i32 {
    let q = x.genuine();
    let m = q.rank() / 2;
    let c = if (m * (m.saturating_sub(1)) / 2) % 2 == 1 { hilbert(&(-BigInt::one()), &(-BigInt::one()), v) } else { 1 };
    hasse(&q, v) * c
}

/// Signature for fields with an ordering, when all entries are constants.
pub fn signature(x: &GWElement) -> Option<i64> {
    if !matches!(x.field().base, BaseField::Rationals | BaseField::RealModel) {
        return None;
    }
    let side = |xs: &[SquareClass]| -> Option<i64> { xs.iter().map(|e| e.sign().map(i64::from)).sum() };
    Some(side(x.positive())? - side(x.negative())?)
}

/// Determinant class `det(pos)·det(neg)`.
pub fn det(x: &GWElement) -> SquareClass {
    x.positive_form().det().mul(&x.negative_form().det())
}

/// Signed discriminant (−1)^{r(r−1)/2}·det.
pub fn disc(x: &GWElement) -> SquareClass {
    let r = x.rank();
    let d = det(x);
    if (r * (r - 1) / 2).rem_euclid(2) == 1 {
        d.neg()
    } else {
        d
    }
}

/// Classical invariants of a virtual form. The Hasse data describe the
/// genuine form `pos ⊥ −neg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    pub rank: i64,
    pub det: SquareClass,
    pub disc: SquareClass,
    pub signature: Option<i64>,
    pub hasse: Vec<(Place, i32)>,
}

pub fn invariants(x: &GWElement) -> InvariantProfile {
    let constant_q = x.field().base == BaseField::Rationals
        && !x.field().is_function_field();
    let hasse_data = if constant_q {
        let q = x.genuine();
        relevant_places(&q.entries).into_iter().map(|v| (v, hasse(&q, v))).collect()
    } else {
        Vec::new()
    };
    InvariantProfile { rank: x.rank(), det: det(x), disc: disc(x), signature: signature(x), hasse: hasse_data }
}
