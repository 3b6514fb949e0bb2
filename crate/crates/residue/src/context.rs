use std::collections::BTreeMap;
use std::fmt;

use field_arith::{FieldElement, FieldRef, PrimeDivisor};
use mw_symbols::{MWExpr, TwistedMWExpr};

use crate::error::{ResidueError, Result};

/// A discrete valuation of a function field together with the choices the
/// twisted residue depends on.
#[derive(Clone, Debug)]
pub struct ValuationContext {
    pub divisor: PrimeDivisor,
    /// π with ν(π) = 1; may differ from the divisor's equation by a unit.
    pub uniformizer: FieldElement,
    /// Local generator of each twisting line bundle near the divisor, as a
    /// rational section.
    pub generators: Vec<(String, FieldElement)>,
    /// Substitutions taking the input expression into this chart, if it
    /// lives on another one.
    pub chart: Option<BTreeMap<String, FieldElement>>,
}

impl ValuationContext {
    pub fn new(divisor: PrimeDivisor) -> ValuationContext {
        let uniformizer = divisor.pi().clone();
        ValuationContext { divisor, uniformizer, generators: vec![], chart: None }
    }

    pub fn with_uniformizer(mut self, pi: FieldElement) -> Result<ValuationContext> {
        if self.divisor.valuation(&pi)? != 1 {
            return Err(ResidueError::NotUniformizer(pi.to_string()));
        }
        self.uniformizer = pi;
        Ok(self)
    }

    pub fn with_generator(mut self, label: &str, g: FieldElement) -> ValuationContext {
        self.generators.push((label.into(), g));
        self
    }

    pub fn with_chart(mut self, images: BTreeMap<String, FieldElement>) -> ValuationContext {
        self.chart = Some(images);
        self
    }

    pub fn field(&self) -> &FieldRef {
        self.divisor.field()
    }

    pub fn label(&self) -> &str {
        self.divisor.label()
    }

    pub(crate) fn generator(&self, label: &str) -> Option<&FieldElement> {
        self.generators.iter().find(|(l, _)| l == label).map(|(_, g)| g)
    }

    /// Moves an expression into this chart.
    pub fn transport(&self, x: &TwistedMWExpr) -> Result<TwistedMWExpr> {
        let Some(images) = &self.chart else {
            return Ok(x.clone());
        };
        let f = self.field();
        let expr = x.expr.map_symbols(f, |a| Ok(a.substitute(f, images)?))?;
        let twist = x
            .twist
            .iter()
            .map(|(l, u)| Ok((l.clone(), u.substitute(f, images)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(TwistedMWExpr::new(expr, twist))
    }
}

/// A residue along one divisor: a value over the residue field and the
/// twist factors it carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueResult {
    pub divisor: String,
    pub value: MWExpr,
    /// `π̄^∨` as `label^∨`, then the reduced local generators of the input
    /// twists; pairs of a conormal and the ideal sheaf it is dual to cancel.
    pub twist: Vec<String>,
}

impl ResidueResult {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for ResidueResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let twist = if self.twist.is_empty() { "1".to_string() } else { self.twist.join(" ⊗ ") };
        write!(f, "({} ⊗ {})·[{}]", self.value, twist, self.divisor)
    }
}
