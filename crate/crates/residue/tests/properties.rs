use std::collections::BTreeMap;

use field_arith::{Field, FieldElement, FieldRef, PrimeDivisor};
use mw_symbols::{mw_equal, Decision, MWExpr, TwistedMWExpr, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use residue::*;

const ENTRIES: &[&str] = &[
    "t", "t^-1", "t^2", "3*t", "-t", "(x+1)*t", "x", "x+1", "-1", "2", "t+x", "(x-1)/t", "x*t^3", "5", "t^2+1", "-2*x/t^2",
];
const UNITS: &[&str] = &["x+2", "3", "-1", "x^2+1", "(x+3)/(x-1)", "x+t", "2*x", "-6"];
const POINTS: &[&str] = &["2", "3", "-5", "1/3", "7", "-2/7"];

fn field() -> FieldRef {
    Field::parse("Q(x,t)").unwrap()
}

fn el(f: &FieldRef, s: &str) -> FieldElement {
    FieldElement::parse(f, s).unwrap()
}

fn random_expr(f: &FieldRef, rng: &mut ChaCha8Rng, degree: i64) -> MWExpr {
    let mut x = MWExpr::zero(f);
    for _ in 0..rng.gen_range(1..4) {
        let eta = rng.gen_range(0..2u32) + (-degree).max(0) as u32;
        let n = (degree + eta as i64) as usize;
        let symbols = (0..n).map(|_| el(f, ENTRIES[rng.gen_range(0..ENTRIES.len())])).collect();
        let c = rng.gen_range(-3..4i64);
        x = x.add(&MWExpr::word(f, Word::new(eta, symbols).unwrap()).scale(c));
    }
    x
}

/// Compares two expressions over Q(x) by specializing x at rational points,
/// where equality is decidable. Points hitting a zero or pole are skipped.
fn agree(a: &MWExpr, b: &MWExpr) -> bool {
    let q = Field::parse("Q").unwrap();
    let diff = a.sub(b);
    let mut decided = 0;
    for p in POINTS {
        let images = BTreeMap::from([("x".to_string(), el(&q, p))]);
        let Ok(s) = diff.map_symbols(&q, |e| Ok(e.substitute(&q, &images)?)) else {
            continue;
        };
        match mw_equal(&s, &MWExpr::zero(&q)).unwrap() {
            Decision::Equal => decided += 1,
            Decision::NotEqual => return false,
            Decision::Undecided => {}
        }
    }
    decided > 0
}

fn at_t(f: &FieldRef) -> ValuationContext {
    ValuationContext::new(PrimeDivisor::coordinate(f, "t").unwrap())
}

#[test]
fn uniformizer_independence() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..100 {
        let x = TwistedMWExpr::untwisted(random_expr(&f, &mut rng, 1));
        let u = el(&f, UNITS[i % UNITS.len()]);
        let plain = residue_at(&x, &at_t(&f)).unwrap();
        let moved = residue_at(&x, &at_t(&f).with_uniformizer(u.mul(&el(&f, "t"))).unwrap()).unwrap();
        assert_eq!(plain.twist, moved.twist);
        assert!(agree(&plain.value, &moved.value), "{x}: {} vs {}", plain.value, moved.value);
    }
}

#[test]
fn eta_equivariance() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let d = rng.gen_range(0..3);
        let x = random_expr(&f, &mut rng, d);
        let r = residue_at(&TwistedMWExpr::untwisted(x.clone()), &at_t(&f)).unwrap();
        let re = residue_at(&TwistedMWExpr::untwisted(MWExpr::eta(&f, 1).mul(&x)), &at_t(&f)).unwrap();
        let small = r.value.field().clone();
        assert!(agree(&re.value, &MWExpr::eta(&small, 1).mul(&r.value)), "{x}");
    }
}

#[test]
fn unit_multiplication() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let ctx = at_t(&f);
    for i in 0..60 {
        let d = rng.gen_range(0..3);
        let x = random_expr(&f, &mut rng, d);
        let u = el(&f, UNITS[i % UNITS.len()]);
        let r = residue_at(&TwistedMWExpr::untwisted(x.clone()), &ctx).unwrap();
        let ru = residue_at(&TwistedMWExpr::untwisted(MWExpr::unit_form(&u).unwrap().mul(&x)), &ctx).unwrap();
        let ub = ctx.divisor.specialize(&u).unwrap();
        assert!(agree(&ru.value, &MWExpr::unit_form(&ub).unwrap().mul(&r.value)), "<{u}>*{x}");
    }
}

#[test]
fn degree_drops_by_one() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let d = rng.gen_range(-1..4);
        let x = random_expr(&f, &mut rng, d);
        let r = residue_at(&TwistedMWExpr::untwisted(x), &at_t(&f)).unwrap();
        if !r.is_zero() {
            assert_eq!(r.value.degree().unwrap(), Some(d - 1));
        }
    }
}

#[test]
fn unit_words_have_no_residue() {
    let f = field();
    let units = ["x", "x+1", "-1", "2", "t+x", "x^2+t", "(x+t)/(x-t)", "5*x"];
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..100 {
        let n = rng.gen_range(0..4);
        let eta = rng.gen_range(0..3);
        let symbols = (0..n).map(|_| el(&f, units[rng.gen_range(0..units.len())])).collect();
        let x = MWExpr::word(&f, Word::new(eta, symbols).unwrap());
        assert!(residue_at(&TwistedMWExpr::untwisted(x.clone()), &at_t(&f)).unwrap().is_zero(), "{x}");
    }
}
