use field_arith::{Field, FieldElement};
use num_bigint::BigInt;
use proptest::prelude::*;
use qf_gw::*;

fn forms(p: u64, max_rank: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_rank {
        layer = layer
            .iter()
            .flat_map(|f: &Vec<u64>| (1..p).map(move |a| [f.clone(), vec![a]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn gw_equal_agrees_with_enumeration() {
    for p in [3u64, 5] {
        let k = Field::parse(&format!("F{p}")).unwrap();
        let all = forms(p, 3);
        for f in &all {
            for g in &all {
                let to = |xs: &[u64]| {
                    let es: Vec<FieldElement> = xs.iter().map(|&a| FieldElement::int(&k, a as i64)).collect();
                    GWElement::diagonal(&k, &es).unwrap()
                };
                let oracle = brute_force_isometry(p, f, g).unwrap();
                assert_eq!(gw_equal(&to(f), &to(g)).unwrap(), oracle, "F{p}: {f:?} vs {g:?}");
            }
        }
    }
}

fn int() -> impl Strategy<Value = i64> {
    prop_oneof![-60i64..-1, 1i64..60]
}

fn places(a: i64, b: i64) -> Vec<Place> {
    let mut v = vec![Place::Real];
    for p in prime_factors(&BigInt::from(2 * a * b)) {
        v.push(Place::Prime(p));
    }
    v
}

proptest! {
    #[test]
    fn hilbert_symbol_laws(a in int(), b in int(), c in int()) {
        let (ba, bb, bc) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
        let prod: i32 = places(a, b).into_iter().map(|v| hilbert(&ba, &bb, v)).product();
        prop_assert_eq!(prod, 1);
        for v in places(a * b, c) {
            prop_assert_eq!(hilbert(&ba, &bb, v), hilbert(&bb, &ba, v));
            prop_assert_eq!(hilbert(&ba, &(-&ba), v), 1);
            prop_assert_eq!(hilbert(&ba, &(&bb * &bc), v), hilbert(&ba, &bb, v) * hilbert(&ba, &bc, v));
            if a != 1 {
                prop_assert_eq!(hilbert(&ba, &(BigInt::from(1) - &ba), v), 1);
            }
        }
    }

    #[test]
    fn e2_of_pfister_products_is_the_symbol(a in int(), b in int()) {
        let q = Field::parse("Q").unwrap();
        let (ea, eb) = (FieldElement::int(&q, a), FieldElement::int(&q, b));
        let one = GWElement::one(&q);
        let x = GWElement::unit(&ea).unwrap().sub(&one).mul(&GWElement::unit(&eb).unwrap().sub(&one));
        prop_assert!(in_i_power(&x, 2).unwrap());
        prop_assert_eq!(e_n(&x, 2), milnor_mod2(&q, &BigInt::from(1), &[ea.clone(), eb.clone()]));
        prop_assert_eq!(in_i_power(&x, 3).unwrap(), e_n(&x, 2).unwrap().is_zero() && (a > 0 || b > 0));
    }

    #[test]
    fn ring_laws(xs in proptest::collection::vec((int(), -2i64..3), 1..4), ys in proptest::collection::vec((int(), -2i64..3), 1..4)) {
        for name in ["Q", "R", "F5", "F3", "C"] {
            let k = Field::parse(name).unwrap();
            let build = |v: &[(i64, i64)]| v.iter().fold(GWElement::zero(&k), |acc, &(a, m)| {
                let e = FieldElement::int(&k, a);
                if e.is_zero() { acc } else { acc.add(&GWElement::unit(&e).unwrap().scale(m)) }
            });
            let (x, y) = (build(&xs), build(&ys));
            prop_assert_eq!(x.add(&y).rank(), x.rank() + y.rank());
            prop_assert_eq!(x.mul(&y).rank(), x.rank() * y.rank());
            let h = GWElement::hyperbolic(&k);
            prop_assert!(witt_reduce(&h.mul(&x)).is_zero().unwrap());
            prop_assert!(witt_equal(&witt_reduce(&x).representative().clone(), &x).unwrap());
            prop_assert!(witt_equal(&x.add(&h.scale(3)), &x).unwrap());
            for n in 1..=3 {
                if in_i_power(&x, n).unwrap() {
                    prop_assert!(in_i_power(&x, n - 1).unwrap());
                }
            }
            prop_assert!(gw_equal(&x.mul(&y), &y.mul(&x)).unwrap());
        }
    }

    #[test]
    fn nodal_class_invariance(a in int(), b in int(), u in int()) {
        let q = Field::parse("Q").unwrap();
        let (ea, eb, eu) = (FieldElement::int(&q, a), FieldElement::int(&q, b), FieldElement::int(&q, u));
        let x = nodal_class(&ea, &eb).unwrap();
        let y = nodal_class(&ea.mul(&eu.pow(4).unwrap()), &eb.mul(&eu.pow(6).unwrap())).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert!(GWElement::hyperbolic(&q).mul(&x).is_zero());
    }
}
