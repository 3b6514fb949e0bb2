use mw_symbols::{mw_compare, Decision, MWExpr, TwistedMWExpr, Word};

use crate::context::{ResidueResult, ValuationContext};
use crate::error::{ResidueError, Result};
use crate::residue::total_boundary;

/// A coefficient supported on one divisor: `(value ⊗ twist)·[divisor]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTerm {
    pub divisor: String,
    pub value: MWExpr,
    pub twist: Vec<String>,
}

impl From<ResidueResult> for CycleTerm {
    fn from(r: ResidueResult) -> CycleTerm {
        CycleTerm { divisor: r.divisor, value: r.value, twist: r.twist }
    }
}

#[derive(Clone, Debug)]
pub struct BoundaryCheck {
    pub divisor: String,
    pub computed: MWExpr,
    pub claimed: MWExpr,
    pub twist: Vec<String>,
    pub decision: Decision,
}

#[derive(Clone, Debug)]
pub struct BoundaryReport {
    pub checks: Vec<BoundaryCheck>,
    pub decision: Decision,
}

/// Checks ∂(witness) = left − right divisor by divisor.
pub fn verify_boundary_relation(
    left: &[CycleTerm],
    right: &[CycleTerm],
    witness: &TwistedMWExpr,
    divisors: &[ValuationContext],
) -> Result<BoundaryReport> {
    let boundary = total_boundary(witness, divisors)?;
    for t in left.iter().chain(right) {
        if !divisors.iter().any(|d| d.label() == t.divisor) {
            return Err(ResidueError::Unsupported(format!("claim on unknown divisor {}", t.divisor)));
        }
    }
    let mut checks = vec![];
    let mut decision = Decision::Equal;
    for ctx in divisors {
        let label = ctx.label();
        let field = ctx.divisor.residue_field();
        let computed = boundary.iter().find(|r| r.divisor == label);
        let mut claimed = MWExpr::zero(&field);
        let mut twist: Option<Vec<String>> = computed.map(|r| r.twist.clone());
        for (terms, sign) in [(left, 1), (right, -1)] {
            for t in terms.iter().filter(|t| t.divisor == label) {
                match &twist {
                    Some(tw) if *tw != t.twist => {
                        return Err(ResidueError::TwistMismatch {
                            divisor: label.into(),
                            claimed: t.twist.join(" ⊗ "),
                            computed: tw.join(" ⊗ "),
                        })
                    }
                    _ => twist = Some(t.twist.clone()),
                }
                claimed = claimed.try_add(&t.value.scale(sign)).map_err(ResidueError::from)?;
            }
        }
        let computed = computed.map(|r| r.value.clone()).unwrap_or_else(|| MWExpr::zero(&field));
        let d = mw_compare(&computed, &claimed)?.decision;
        decision = decision.and(d);
        checks.push(BoundaryCheck { divisor: label.into(), computed, claimed, twist: twist.unwrap_or_default(), decision: d });
    }
    Ok(BoundaryReport { checks, decision })
}

/// Restricts a coefficient of degree ≤ 0 to the divisor. Such an expression
/// only depends on square classes (η[a] = ⟨a⟩ − 1), so even powers of π are
/// dropped from each entry before reducing.
pub fn restrict(x: &MWExpr, ctx: &ValuationContext) -> Result<MWExpr> {
    let x = ctx.transport(&TwistedMWExpr::untwisted(x.clone()))?.expr;
    let target = ctx.divisor.residue_field();
    let mut out = MWExpr::zero(&target);
    for (w, c) in x.terms() {
        if (w.eta as usize) < w.symbols.len() {
            return Err(ResidueError::Unsupported(format!("restriction of a word of degree {}", w.degree())));
        }
        let mut symbols = vec![];
        for a in &w.symbols {
            let e = ctx.divisor.valuation(a)?;
            if e % 2 != 0 {
                return Err(ResidueError::Unsupported(format!("{a} is not a unit up to squares along {}", ctx.label())));
            }
            let u = a.div(&ctx.divisor.pi().pow(e)?)?;
            symbols.push(ctx.divisor.specialize(&u)?);
        }
        out = out.add(&MWExpr::word(&target, Word::new(w.eta, symbols).map_err(ResidueError::from)?).scale(c));
    }
    Ok(out)
}
