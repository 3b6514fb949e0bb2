use std::fmt;

use field_arith::FieldElement;

use crate::error::Result;
use crate::expr::MWExpr;

/// x ⊗ (u₁·l₁) ⊗ … with l_i named line-bundle generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedMWExpr {
    pub expr: MWExpr,
    pub twist: Vec<(String, FieldElement)>,
}

impl TwistedMWExpr {
    pub fn untwisted(expr: MWExpr) -> TwistedMWExpr {
        TwistedMWExpr { expr, twist: vec![] }
    }

    pub fn new(expr: MWExpr, twist: Vec<(String, FieldElement)>) -> TwistedMWExpr {
        TwistedMWExpr { expr, twist }
    }

    /// Moves every multiplier into the expression: x ⊗ u·l = ⟨u⟩x ⊗ l.
    pub fn canonical(&self) -> Result<TwistedMWExpr> {
        let mut expr = self.expr.clone();
        let mut twist = vec![];
        for (label, u) in &self.twist {
            if !u.is_one() {
                expr = MWExpr::unit_form(u)?.try_mul(&expr)?;
            }
            twist.push((label.clone(), FieldElement::one(u.field())));
        }
        Ok(TwistedMWExpr { expr, twist })
    }
}

impl fmt::Display for TwistedMWExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)?;
        for (label, u) in &self.twist {
            if u.is_one() {
                write!(f, " ⊗ {label}")?;
            } else {
                write!(f, " ⊗ ({u})·{label}")?;
            }
        }
        Ok(())
    }
}
