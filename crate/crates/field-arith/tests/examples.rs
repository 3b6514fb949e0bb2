use field_arith::*;
use num_bigint::BigInt;

fn qxt() -> FieldRef {
    Field::parse("Q(x,t)").unwrap()
}

fn el(f: &FieldRef, s: &str) -> FieldElement {
    FieldElement::parse(f, s).unwrap()
}

#[test]
fn normalize_cancels_common_factors() {
    let f = Field::parse("Q(x)").unwrap();
    assert_eq!(el(&f, "(x^2-1)/(x-1)"), el(&f, "x+1"));
    assert_eq!(el(&f, "(x^2-1)/(x-1)").to_string(), "x + 1");
    let q = Field::parse("Q").unwrap();
    assert_eq!(el(&q, "2/4").to_string(), "1/2");
    let f = qxt();
    assert_eq!(el(&f, "(t*x)/x"), el(&f, "t"));
    let e = el(&f, "(x^2*t - t)/(2*x + 2)");
    assert_eq!(e.normalize(), e);
    assert_eq!(e.to_string(), "1/2*x*t - 1/2*t");
}

#[test]
fn normalize_multivariate_gcd() {
    let f = Field::parse("Q(a,b,c)").unwrap();
    let e = el(&f, "((a+b)^3*(a-c)*(b^2+c))/((a+b)*(b^2+c)^2*(a*c-1))");
    assert_eq!(e, el(&f, "(a+b)^2*(a-c)/((b^2+c)*(a*c-1))"));
    let p = Field::parse("F5(x,y)").unwrap();
    assert_eq!(el(&p, "(x^2 - y^2)/(3*x + 3*y)"), el(&p, "2*x - 2*y"));
}

#[test]
fn prime_field_arithmetic() {
    let f = Field::parse("F7").unwrap();
    assert_eq!(el(&f, "3*5"), el(&f, "1"));
    assert_eq!(el(&f, "1/3"), el(&f, "5"));
    assert_eq!(el(&f, "-1").to_string(), "-1");
    assert!(FieldElement::parse(&f, "1/7").is_err());
}

#[test]
fn square_class_examples() {
    let f5 = Field::parse("F5").unwrap();
    assert!(square_class(&el(&f5, "4")).unwrap().is_one());
    assert_eq!(square_class(&el(&f5, "3")).unwrap(), el(&f5, "2"));
    let q = Field::parse("Q").unwrap();
    assert_eq!(square_class(&el(&q, "18")).unwrap(), el(&q, "2"));
    assert_eq!(square_class(&el(&q, "-8/27")).unwrap(), el(&q, "-6"));
    let f = qxt();
    assert_eq!(square_class(&el(&f, "x^2/t")).unwrap(), el(&f, "t"));
    assert_eq!(square_class(&el(&f, "4*(x+1)^3*t^2/(x-t)")).unwrap(), el(&f, "(x+1)*(x-t)"));
    let r = Field::parse("R").unwrap();
    assert_eq!(square_class(&el(&r, "-7")).unwrap(), el(&r, "-1"));
    let c = Field::parse("C").unwrap();
    assert!(square_class(&el(&c, "-7")).unwrap().is_one());
    assert!(square_class(&FieldElement::zero(&q)).is_err());
}

#[test]
fn valuation_examples() {
    let f = qxt();
    let t = PrimeDivisor::coordinate(&f, "t").unwrap();
    assert_eq!(t.valuation(&el(&f, "x^2*t^3/(x+1)")).unwrap(), 3);
    assert_eq!(t.unit_part(&el(&f, "x^2*t/(x+1)")).unwrap(), el(&f, "x^2/(x+1)"));
    assert_eq!(t.unit_part(&el(&f, "t")).unwrap(), el(&f, "1"));
    let g = Field::parse("Q(y)").unwrap();
    let y = PrimeDivisor::coordinate(&g, "y").unwrap();
    assert_eq!(y.valuation(&el(&g, "1/y")).unwrap(), -1);
    assert_eq!(y.unit_part(&el(&g, "y^2*(1+y)")).unwrap(), el(&g, "1+y"));
    let ab = Field::parse("Q(a,b)").unwrap();
    let delta = PrimeDivisor::symbolic(el(&ab, "4*a^3+27*b^2")).unwrap();
    assert_eq!(delta.valuation(&el(&ab, "4*a^3+27*b^2")).unwrap(), 1);
    assert_eq!(delta.valuation(&el(&ab, "a/(4*a^3+27*b^2)^2")).unwrap(), -2);
    assert!(t.valuation(&FieldElement::zero(&f)).is_err());
}

#[test]
fn specialize_examples() {
    let f = Field::parse("Q(x,y,t)").unwrap();
    let y = PrimeDivisor::coordinate(&f, "y").unwrap();
    let k = y.residue_field();
    assert_eq!(k.to_string(), "Q(x,t)");
    assert_eq!(y.specialize(&el(&f, "x+y")).unwrap(), el(&k, "x"));
    assert_eq!(y.specialize(&el(&f, "x^2*t")).unwrap(), el(&k, "x^2*t"));
    assert!(y.specialize(&el(&f, "x/y")).is_err());
    assert!(y.specialize(&el(&f, "y")).unwrap().is_zero());

    let ab = Field::parse("Q(a,b)").unwrap();
    let delta = PrimeDivisor::symbolic(el(&ab, "4*a^3+27*b^2")).unwrap().with_label("D");
    let u = delta.specialize(&el(&ab, "b/a")).unwrap();
    assert_eq!(u.field().residue_of.as_deref(), Some("D"));
    assert_eq!(square_class(&u).unwrap(), square_class(&delta.specialize(&el(&ab, "4*a*b")).unwrap()).unwrap());
}

#[test]
fn univariate_irreducibility_checks() {
    let q = Field::parse("Q(x)").unwrap();
    assert!(PrimeDivisor::symbolic(el(&q, "x^2-4")).is_err());
    assert!(PrimeDivisor::symbolic(el(&q, "x^2-2")).is_ok());
    assert!(PrimeDivisor::symbolic(el(&q, "2*x^3-1/4")).is_err());
    let f = Field::parse("F5(x)").unwrap();
    assert!(PrimeDivisor::symbolic(el(&f, "x^2-2")).is_ok());
    assert!(PrimeDivisor::symbolic(el(&f, "x^2+1")).is_err());
}

#[test]
fn substitution_across_charts() {
    let u1 = qxt();
    let u0 = Field::parse("Q(y,s)").unwrap();
    let mut images = std::collections::BTreeMap::new();
    images.insert("x".to_string(), el(&u0, "1/y"));
    images.insert("t".to_string(), el(&u0, "y^2*s"));
    assert_eq!(el(&u1, "x^2*t").substitute(&u0, &images).unwrap(), el(&u0, "s"));
    assert_eq!(
        el(&u1, "x+t").substitute(&u0, &images).unwrap(),
        el(&u0, "(1 + y^3*s)/y")
    );
}

#[test]
fn parse_errors_report_positions() {
    let f = qxt();
    match FieldElement::parse(&f, "x + z") {
        Err(FieldError::Parse { pos, .. }) => assert_eq!(pos, 4),
        other => panic!("{other:?}"),
    }
    assert!(FieldElement::parse(&f, "(x").is_err());
    assert!(FieldElement::parse(&f, "x/0").is_err());
    assert_eq!(el(&f, "t^-1"), el(&f, "1/t"));
    assert_eq!(el(&f, "t^(-2)"), el(&f, "1/t^2"));
    assert_eq!(squarefree_part(&BigInt::from(-72)), BigInt::from(-2));
}

#[test]
fn square_roots() {
    let f = Field::parse("Q(x,t)").unwrap();
    let e = FieldElement::parse(&f, "9*x^4*t^2/(4*(x+1)^2)").unwrap();
    assert_eq!(e.sqrt().unwrap().mul(&e.sqrt().unwrap()), e);
    assert!(FieldElement::parse(&f, "x^2*t").unwrap().sqrt().is_none());
    assert!(FieldElement::parse(&f, "x^2 + 1").unwrap().sqrt().is_none());
    let q = Field::parse("Q").unwrap();
    assert_eq!(FieldElement::parse(&q, "18/8").unwrap().sqrt().unwrap().to_string(), "3/2");
    assert!(FieldElement::parse(&q, "-4").unwrap().sqrt().is_none());
}
