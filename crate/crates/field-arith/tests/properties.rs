use field_arith::*;
use proptest::prelude::*;

fn qxt() -> FieldRef {
    Field::parse("Q(x,t)").unwrap()
}

fn small_poly() -> impl Strategy<Value = String> {
    proptest::collection::vec((-3i64..4, 0u32..3, 0u32..3), 1..4).prop_map(|ts| {
        ts.iter().map(|(c, a, b)| format!("({c})*x^{a}*t^{b}")).collect::<Vec<_>>().join(" + ")
    })
}

fn nonzero_element() -> impl Strategy<Value = String> {
    (small_poly(), small_poly())
        .prop_map(|(n, d)| format!("({n})/({d})"))
        .prop_filter("nonzero", |s| FieldElement::parse(&qxt(), s).is_ok_and(|e| !e.is_zero()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalize_is_idempotent(s in nonzero_element()) {
        let e = FieldElement::parse(&qxt(), &s).unwrap();
        prop_assert_eq!(e.normalize(), e.clone());
        let again = FieldElement::parse(&qxt(), &e.to_string()).unwrap();
        prop_assert_eq!(again, e);
    }

    #[test]
    fn square_class_is_multiplicative(a in nonzero_element(), b in nonzero_element(), u in nonzero_element()) {
        let f = qxt();
        let (a, b, u) = (FieldElement::parse(&f, &a).unwrap(), FieldElement::parse(&f, &b).unwrap(), FieldElement::parse(&f, &u).unwrap());
        let ab = square_class(&a.mul(&b)).unwrap();
        let prod = square_class(&square_class(&a).unwrap().mul(&square_class(&b).unwrap())).unwrap();
        prop_assert_eq!(&ab, &prod);
        prop_assert_eq!(square_class(&a.mul(&u).mul(&u)).unwrap(), square_class(&a).unwrap());
    }

    #[test]
    fn valuation_is_additive(a in nonzero_element(), b in nonzero_element()) {
        let f = qxt();
        let (a, b) = (FieldElement::parse(&f, &a).unwrap(), FieldElement::parse(&f, &b).unwrap());
        for d in [PrimeDivisor::coordinate(&f, "t").unwrap(), PrimeDivisor::symbolic(FieldElement::parse(&f, "x+t").unwrap()).unwrap()] {
            let (va, vb) = (d.valuation(&a).unwrap(), d.valuation(&b).unwrap());
            prop_assert_eq!(d.valuation(&a.mul(&b)).unwrap(), va + vb);
            let u = d.unit_part(&a).unwrap();
            prop_assert_eq!(d.valuation(&u).unwrap(), 0);
            prop_assert_eq!(d.pi().pow(va).unwrap().mul(&u), a.clone());
            prop_assert_eq!(d.unit_part(&a.mul(&b)).unwrap(), u.mul(&d.unit_part(&b).unwrap()));
            if matches!(d.mode(), DivisorMode::CoordinateVariable(_)) {
                prop_assert!(d.specialize(&u).is_ok());
            }
        }
    }

    #[test]
    fn prime_field_square_classes(a in 1u64..1000, u in 1u64..1000) {
        for p in [3u64, 5, 7, 11] {
            let f = Field::base_only(BaseField::prime(p).unwrap());
            let (a, u) = (FieldElement::int(&f, a as i64), FieldElement::int(&f, u as i64));
            if a.is_zero() || u.is_zero() { continue; }
            prop_assert_eq!(square_class(&a.mul(&u).mul(&u)).unwrap(), square_class(&a).unwrap());
        }
    }
}

fn poly_in(f: &FieldRef, s: &str) -> field_arith::poly::Poly {
    FieldElement::parse(f, s).unwrap().numerator().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gcd_recovers_common_factor(a in small_poly(), b in small_poly(), c in small_poly()) {
        for name in ["Q(x,t)", "F3(x,t)"] {
            let f = Field::parse(name).unwrap();
            let (a, b, c) = (poly_in(&f, &a), poly_in(&f, &b), poly_in(&f, &c));
            if a.is_zero() || b.is_zero() || c.is_zero() { continue; }
            let g = a.mul(&c).gcd(&b.mul(&c));
            prop_assert!(a.mul(&c).div_exact(&g).is_some());
            prop_assert!(b.mul(&c).div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c.monic()).is_some(), "{:?} vs {:?}", g, c);
            prop_assert_eq!(g, a.gcd(&b).mul(&c).monic());
        }
    }
}
