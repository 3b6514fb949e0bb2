use field_arith::{Field, FieldElement, FieldRef};
use mw_symbols::*;
use qf_gw::{parse_form, witt_equal, GWElement, KBar};

fn q() -> FieldRef {
    Field::parse("Q").unwrap()
}

fn mw(f: &FieldRef, s: &str) -> MWExpr {
    parse_expr(f, s).unwrap()
}

fn norm(f: &FieldRef, s: &str) -> MWExpr {
    mw_normalize(&mw(f, s))
}

#[test]
fn parse_and_display() {
    let f = q();
    let h = mw(&f, "2 + eta*[-1]");
    assert_eq!(h.to_string(), "2 + eta*[-1]");
    assert_eq!(mw(&f, "h"), h);
    assert_eq!(mw(&f, "<-1> + 1"), h);
    assert_eq!(mw(&f, "eta^2*[2,3] - 3*[5]").to_string(), "-3*[5] + eta^2*[2,3]");
    assert_eq!(mw(&f, "eta*[2]"), mw(&f, "[2]*eta"));
    assert_eq!(mw(&f, "(1 + eta*[2])*(1 + eta*[3])").len(), 4);
    assert_eq!(mw(&f, "0*[2,3]"), MWExpr::zero(&f));
    let g = Field::parse("Q(t)").unwrap();
    assert_eq!(mw(&g, "eta*[t^-1]").to_string(), "eta*[1/t]");
    assert_eq!(mw(&g, "[(t+1)/2, t]").degree().unwrap(), Some(2));
}

#[test]
fn parse_errors() {
    let f = q();
    let err = |s: &str| parse_expr(&f, s).unwrap_err();
    assert_eq!(err("2 + "), MwError::Parse { pos: 4, msg: "expected a factor".into() });
    assert!(matches!(err("[2,"), MwError::Parse { pos: 0, .. }));
    assert!(matches!(err("[2, 3 +]"), MwError::Parse { pos: 7, .. }));
    assert_eq!(err("[0]"), MwError::ZeroSymbol);
    assert!(matches!(err("eta^"), MwError::Parse { pos: 4, .. }));
    assert!(matches!(err("2 ) "), MwError::Parse { pos: 2, .. }));
}

#[test]
fn normalization_rules() {
    let f = q();
    assert!(norm(&f, "eta*(2 + eta*[-1])").is_zero());
    assert!(norm(&f, "eta*(2 + eta*[-1])*[5,7]").is_zero());
    assert!(norm(&f, "[2][-1]").is_zero());
    assert!(norm(&f, "[2]*[-1]").is_zero());
    assert!(norm(&f, "[1/3, 2/3]").is_zero());
    assert!(norm(&f, "[1]").is_zero());
    assert!(norm(&f, "eta*[5, 1]").is_zero());
    assert_eq!(norm(&f, "[4]"), norm(&f, "h*[2]"));
    assert_eq!(norm(&f, "[4]").to_string(), "2*[2]");
    assert_eq!(norm(&f, "[18]"), norm(&f, "[2] + h*[3]"));
    let x = norm(&f, "[4] + eta^3*[-1,2,3] - [2,5]");
    assert_eq!(mw_normalize(&x), x);
    let g = Field::parse("Q(x,t)").unwrap();
    assert_eq!(norm(&g, "[x^2*t]"), norm(&g, "[t] + h*[x]"));
    assert_eq!(norm(&g, "eta*[t^-1]"), mw(&g, "eta*[1/t]"));
    let p = Field::parse("F5").unwrap();
    assert_eq!(norm(&p, "[4]"), mw(&p, "[4]"));
}

#[test]
fn eps_commutation_is_opt_in() {
    let f = q();
    let x = mw(&f, "[5,3]");
    assert_eq!(mw_normalize(&x), x);
    let sorted = mw_normalize_with(&x, NormalizeOptions { eps_commute: true });
    assert_eq!(sorted, mw(&f, "-[3,5] - eta*[-1,3,5]"));
    assert_eq!(mw_equal(&x, &sorted).unwrap(), Decision::Equal);
    let y = mw(&f, "eta*[5,3]");
    assert_eq!(mw_normalize_with(&y, NormalizeOptions { eps_commute: true }), mw(&f, "eta*[3,5]"));
}

#[test]
fn evaluations() {
    let f = q();
    assert_eq!(eval_gw(&mw(&f, "1 + eta*[3]")).unwrap(), parse_form(&f, "<3>").unwrap());
    assert_eq!(eval_gw(&mw(&f, "2 + eta*[-1]")).unwrap(), GWElement::hyperbolic(&f));
    let g = Field::parse("Q(t)").unwrap();
    assert_eq!(eval_gw(&mw(&g, "eta*[t^-1]")).unwrap(), parse_form(&g, "<t> - <1>").unwrap());
    assert!(matches!(eval_gw(&mw(&f, "[2]")), Err(MwError::Degree { found: 1, .. })));

    assert_eq!(eval_witt(&mw(&f, "eta")).unwrap().representative(), &GWElement::one(&f));
    assert!(eval_witt(&mw(&f, "eta*h")).unwrap().is_zero().unwrap());
    let a = eval_witt(&mw(&f, "eta^2*(1 + eta*[5])")).unwrap();
    assert!(witt_equal(a.representative(), &parse_form(&f, "<5>").unwrap()).unwrap());
    assert!(eval_witt(&mw(&f, "1")).is_err());
    assert!(matches!(mw(&f, "1 + [2]").degree(), Err(MwError::MixedDegree(..))));
}

#[test]
fn projections() {
    let f = q();
    let p = project(&mw(&f, "eta*[2,3,5]")).unwrap();
    assert!(p.milnor.terms.is_empty());
    assert_eq!(p.commutes, Some(true));

    let u = FieldElement::int(&f, 7);
    let p = project(&MWExpr::symbol(&[u.clone()]).unwrap()).unwrap();
    assert!(witt_equal(&p.witt, &GWElement::pfister(&u).unwrap().neg()).unwrap());
    assert_eq!(p.milnor.to_string(), "{7}");

    let p = project(&mw(&f, "[-1,-1]")).unwrap();
    assert_eq!(p.milnor.to_string(), "{-1,-1}");
    assert_eq!(p.milnor_mod2, p.witt_mod2);
    assert!(matches!(p.milnor_mod2, Some(KBar::Places(ref s)) if s.len() == 2));

    let p = project(&mw(&f, "eta^3*[2]")).unwrap();
    assert_eq!(p.milnor_mod2, Some(KBar::Zero));
    assert_eq!(p.commutes, Some(true));
}

#[test]
fn equality_decisions() {
    let f = q();
    let eq = |a: &str, b: &str| mw_equal(&mw(&f, a), &mw(&f, b)).unwrap();
    assert_eq!(eq("h*eta*[7]", "0"), Decision::Equal);
    assert_eq!(eq("[2]", "[3]"), Decision::NotEqual);
    assert_eq!(eq("[1]", "0"), Decision::Equal);
    assert_eq!(eq("(1 + eta*[2])*(1 + eta*[3])", "1 + eta*[6]"), Decision::Equal);
    assert_eq!(eq("[2,3]", "0"), Decision::NotEqual);
    assert_eq!(eq("[3,-2]", "0"), Decision::Equal);
    assert_eq!(eq("[-1,-1,-1]", "0"), Decision::NotEqual);
    let c = mw_compare(&mw(&f, "2*[-1,-1,-1]"), &mw(&f, "0")).unwrap();
    assert_eq!((c.milnor, c.witt, c.decision), (Some(Decision::Equal), Decision::NotEqual, Decision::NotEqual));
    assert_eq!(eq("[5,5]", "[5,-1]"), Decision::Equal);
    assert_eq!(eq("eta*[2,3]", "eta*[3,2]"), Decision::Equal);
    assert!(matches!(mw_equal(&mw(&f, "[2]"), &mw(&f, "1")), Err(MwError::Degree { .. })));

    let p = Field::parse("F7").unwrap();
    assert_eq!(mw_equal(&mw(&p, "[3,5]"), &mw(&p, "0")).unwrap(), Decision::Equal);
    assert_eq!(mw_equal(&mw(&p, "[3]"), &mw(&p, "[5]")).unwrap(), Decision::NotEqual);

    let r = Field::parse("R").unwrap();
    assert_eq!(mw_equal(&mw(&r, "[2,3]"), &mw(&r, "0")).unwrap(), Decision::Undecided);
    assert_eq!(mw_equal(&mw(&r, "[-1,-1]"), &mw(&r, "0")).unwrap(), Decision::NotEqual);

    let g = Field::parse("Q(x,t)").unwrap();
    let c = mw_compare(&mw(&g, "[x,t]"), &mw(&g, "[t,x]")).unwrap();
    assert_eq!(c.decision, Decision::Undecided);
    assert_eq!(mw_equal(&mw(&g, "[x]"), &mw(&g, "[x^3] - [x^2]")).unwrap(), Decision::Equal);
    assert_eq!(mw_equal(&mw(&g, "[2,3]"), &mw(&g, "0")).unwrap(), Decision::NotEqual);
}

#[test]
fn twists_are_absorbed() {
    let f = Field::parse("Q(x,y)").unwrap();
    let y = FieldElement::parse(&f, "y").unwrap();
    let x = TwistedMWExpr::new(mw(&f, "[x]"), vec![("L".into(), y.clone())]);
    let c = x.canonical().unwrap();
    assert_eq!(c.expr, mw(&f, "<y>*[x]"));
    assert!(c.twist[0].1.is_one());
    assert_eq!(c.to_string(), "[x] + eta*[y,x] ⊗ L");
}
