//! Built-in geometric data: the two charts of the complement of the zero
//! section in the total space of O(−2n) over P¹, and the discriminant divisor.

use std::collections::BTreeMap;

use field_arith::{Field, FieldElement, FieldRef, PrimeDivisor};
use mw_symbols::{parse_expr, MWExpr, TwistedMWExpr};

use crate::context::ValuationContext;
use crate::error::Result;
use crate::relation::{restrict, CycleTerm};

/// Twist label of the line bundle O(−C).
pub const IDEAL_C: &str = "O(-C)";

/// The witness [x^{2n}t] ⊗ x, the divisors C = {x = 0} and D = {y = 0}, and
/// the claimed boundary (n·h·⟨t⟩)·[C] − (⟨−1⟩η[t⁻¹] ⊗ ȳ^∨)·[D].
#[derive(Clone, Debug)]
pub struct ChartPreset {
    pub n: u32,
    /// k(x,t), the chart U₁ containing C.
    pub u1: FieldRef,
    /// k(y,s), the chart U₀ containing D, with x = 1/y and t = y^{2n}s.
    pub u0: FieldRef,
    pub witness: TwistedMWExpr,
    pub divisors: Vec<ValuationContext>,
    pub left: Vec<CycleTerm>,
    pub right: Vec<CycleTerm>,
}

pub fn chart_preset(n: u32) -> Result<ChartPreset> {
    let u1 = Field::parse("Q(x,t)")?;
    let u0 = Field::parse("Q(y,s)")?;
    let el = |f: &FieldRef, s: &str| FieldElement::parse(f, s);
    let x = el(&u1, "x")?;
    let witness = TwistedMWExpr::new(parse_expr(&u1, &format!("[x^{}*t]", 2 * n))?, vec![(IDEAL_C.into(), x.clone())]);

    let c = ValuationContext::new(PrimeDivisor::coordinate(&u1, "x")?.with_label("C")).with_generator(IDEAL_C, x);
    let images = BTreeMap::from([("x".to_string(), el(&u0, "1/y")?), ("t".to_string(), el(&u0, &format!("y^{}*s", 2 * n))?)]);
    let d = ValuationContext::new(PrimeDivisor::coordinate(&u0, "y")?.with_label("D"))
        .with_generator(IDEAL_C, FieldElement::one(&u0))
        .with_chart(images);

    let kc = c.divisor.residue_field();
    let left = vec![CycleTerm {
        divisor: "C".into(),
        value: MWExpr::integer(&kc, n as i64).mul(&parse_expr(&kc, "h*<t>")?),
        twist: vec![],
    }];
    let claim_d = restrict(&parse_expr(&u1, "<-1>*eta*[t^-1]")?, &d)?;
    let right = vec![CycleTerm { divisor: "D".into(), value: claim_d, twist: vec!["y^∨".into(), IDEAL_C.into()] }];
    Ok(ChartPreset { n, u1, u0, witness, divisors: vec![c, d], left, right })
}

/// The divisor Δ = 4a³ + 27b² of k(a,b) in symbolic mode.
pub fn discriminant_divisor() -> Result<ValuationContext> {
    let f = Field::parse("Q(a,b)")?;
    let delta = FieldElement::parse(&f, "4*a^3 + 27*b^2")?;
    Ok(ValuationContext::new(PrimeDivisor::symbolic(delta)?.with_label("Delta")))
}
