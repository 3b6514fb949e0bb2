use field_arith::{Field, FieldElement, FieldRef};
use mw_symbols::*;
use proptest::prelude::*;
use qf_gw::{gw_equal, witt_equal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pool(f: &FieldRef) -> Vec<FieldElement> {
    let src: &[&str] = if f.characteristic() == 0 {
        &["-1", "2", "-2", "3", "-3", "5", "6", "-6", "7", "1/2", "2/3", "4", "9", "18", "-5", "10"]
    } else {
        &["1", "2", "3", "4"]
    };
    src.iter().map(|s| FieldElement::parse(f, s).unwrap()).collect()
}

fn random_expr(rng: &mut ChaCha8Rng, f: &FieldRef, degree: i64) -> MWExpr {
    let pool = pool(f);
    let mut x = MWExpr::zero(f);
    for _ in 0..rng.gen_range(1..=3) {
        let eta: u32 = rng.gen_range(0..=2);
        let len = degree + eta as i64;
        if !(0..=3).contains(&len) {
            continue;
        }
        let symbols = (0..len).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
        let c = rng.gen_range(-3i64..=3);
        x = x.add(&MWExpr::word(f, Word::new(eta, symbols).unwrap()).scale(c));
    }
    x
}

fn check_square(x: &MWExpr) {
    let p = project(x).unwrap();
    assert_eq!(p.commutes, Some(true), "square fails on {x}: {:?} vs {:?}", p.milnor_mod2, p.witt_mod2);
    let nx = mw_normalize(x);
    let q = project(&nx).unwrap();
    let (a, b) = (p.milnor_mod2.clone().unwrap(), q.milnor_mod2.clone().unwrap());
    assert!(a == b || (a.is_zero() && b.is_zero()), "mod-2 image moved: {x} -> {nx}");
    assert!(witt_equal(&p.witt, &q.witt).unwrap(), "Witt image moved: {x} -> {nx}");
    let mut diff = p.milnor.clone();
    for (s, c) in &q.milnor.terms {
        *diff.terms.entry(s.clone()).or_insert(0) -= c;
    }
    diff.terms.retain(|_, c| *c != 0);
    assert_eq!(milnor_zero(&diff), Decision::Equal, "Milnor image moved: {x} -> {nx}");
    assert_eq!(mw_equal(x, &nx).unwrap(), Decision::Equal, "{x} vs {nx}");
    match x.degree().unwrap() {
        Some(0) => assert!(gw_equal(&eval_gw(x).unwrap(), &eval_gw(&nx).unwrap()).unwrap()),
        Some(d) if d < 0 => {
            let (a, b) = (eval_witt(x).unwrap(), eval_witt(&nx).unwrap());
            assert!(witt_equal(a.representative(), b.representative()).unwrap());
        }
        _ => {}
    }
}

#[test]
fn cartesian_square_on_random_expressions() {
    for field in ["F5", "Q"] {
        let f = Field::parse(field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..500 {
            let degree = (i % 5) as i64 - 2;
            check_square(&random_expr(&mut rng, &f, degree));
        }
    }
}

#[test]
fn eval_gw_is_a_ring_morphism() {
    for field in ["F5", "Q"] {
        let f = Field::parse(field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let x = random_expr(&mut rng, &f, 0);
            let y = random_expr(&mut rng, &f, 0);
            let (ex, ey) = (eval_gw(&x).unwrap(), eval_gw(&y).unwrap());
            assert!(gw_equal(&eval_gw(&x.add(&y)).unwrap(), &ex.add(&ey)).unwrap());
            assert!(gw_equal(&eval_gw(&x.mul(&y)).unwrap(), &ex.mul(&ey)).unwrap(), "{x} * {y}");
        }
    }
}

#[test]
fn normalization_is_idempotent() {
    let f = Field::parse("Q").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..200 {
        let x = mw_normalize(&random_expr(&mut rng, &f, (i % 5) as i64 - 2));
        assert_eq!(mw_normalize(&x), x);
    }
}

#[test]
fn eps_commutation_preserves_projections() {
    let f = Field::parse("Q").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..100 {
        let x = random_expr(&mut rng, &f, (i % 3) as i64);
        let y = mw_normalize_with(&x, NormalizeOptions { eps_commute: true });
        assert_eq!(mw_equal(&x, &y).unwrap(), Decision::Equal, "{x} vs {y}");
    }
}

fn nonunit_rational() -> impl Strategy<Value = (i64, i64)> {
    (-40i64..40, 1i64..12).prop_filter("a ∉ {0,1}", |(n, d)| *n != 0 && n != d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn steinberg_over_q((n, d) in nonunit_rational()) {
        let f = Field::parse("Q").unwrap();
        let a = FieldElement::parse(&f, &format!("{n}/{d}")).unwrap();
        prop_assume!(!a.is_one());
        let b = FieldElement::one(&f).sub(&a);
        let x = MWExpr::symbol(&[a, b]).unwrap();
        prop_assert!(mw_normalize(&x).is_zero());
        let p = project(&x).unwrap();
        prop_assert_eq!(milnor_zero(&p.milnor), Decision::Equal);
        prop_assert!(witt_equal(&p.witt, &qf_gw::GWElement::zero(&f)).unwrap());
        prop_assert!(p.milnor_mod2.unwrap().is_zero());
        prop_assert!(p.witt_mod2.unwrap().is_zero());
    }

    #[test]
    fn steinberg_over_f7(a in 2i64..7) {
        let f = Field::parse("F7").unwrap();
        let a = FieldElement::int(&f, a);
        let b = FieldElement::one(&f).sub(&a);
        let x = MWExpr::symbol(&[a, b]).unwrap();
        prop_assert!(mw_normalize(&x).is_zero());
        let p = project(&x).unwrap();
        prop_assert!(witt_equal(&p.witt, &qf_gw::GWElement::zero(&f)).unwrap());
        prop_assert!(p.witt_mod2.unwrap().is_zero());
    }

    #[test]
    fn eta_h_kills_everything(seed in any::<u64>()) {
        let f = Field::parse("Q").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = rng.gen_range(-2..=2);
        let x = random_expr(&mut rng, &f, d);
        let y = MWExpr::eta(&f, 1).mul(&MWExpr::hyperbolic(&f)).mul(&x);
        prop_assert!(mw_normalize(&y).is_zero());
        let y = x.mul(&MWExpr::hyperbolic(&f)).mul(&MWExpr::eta(&f, 1));
        prop_assert_eq!(mw_equal(&y, &MWExpr::zero(&f)).unwrap(), Decision::Equal);
    }
}
