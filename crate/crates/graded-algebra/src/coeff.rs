use field_arith::BaseField;
use num_traits::{One, Zero};
use qf_gw::CoefficientTheory;
use zmodule::{AbGroup, Int, Presentation};

use crate::error::{AlgebraError, Result};

/// The coefficient ring of a presented algebra as a finite ℤ-module: GW(k)
/// for one of the finitely generated base fields, or ℤ itself for classical
/// Chow rings and rank collapses.
#[derive(Clone, Debug)]
pub enum Coefficients {
    Gw(CoefficientTheory),
    Integers,
}

impl Coefficients {
    pub fn new(base: BaseField) -> Result<Coefficients> {
        if base == BaseField::Rationals {
            return Err(AlgebraError::NotFinitelyGenerated("GW(Q)".into()));
        }
        Ok(Coefficients::Gw(CoefficientTheory::new(base)?))
    }

    pub fn parse(s: &str) -> Result<Coefficients> {
        if s.trim() == "Z" {
            return Ok(Coefficients::Integers);
        }
        let base = BaseField::parse(s).map_err(|e| AlgebraError::Presentation(e.to_string()))?;
        Coefficients::new(base)
    }

    pub fn name(&self) -> String {
        match self {
            Coefficients::Gw(t) => format!("GW({})", t.field()),
            Coefficients::Integers => "Z".into(),
        }
    }

    pub fn theory(&self) -> Option<&CoefficientTheory> {
        match self {
            Coefficients::Gw(t) => Some(t),
            Coefficients::Integers => None,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Coefficients::Gw(t) => t.size(),
            Coefficients::Integers => 1,
        }
    }

    /// Representative of the k-th square class.
    pub fn class_label(&self, k: usize) -> String {
        match self {
            Coefficients::Gw(t) => t.classes()[k].to_string(),
            Coefficients::Integers => "1".into(),
        }
    }

    pub fn unit(&self, k: usize) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.size()];
        v[k] = Int::one();
        v
    }

    pub fn one(&self) -> Vec<Int> {
        self.unit(0)
    }

    pub fn int(&self, n: i64) -> Vec<Int> {
        let mut v = self.one();
        v[0] = Int::from(n);
        v
    }

    pub fn h(&self) -> Vec<Int> {
        match self {
            Coefficients::Gw(t) => t.h(),
            Coefficients::Integers => vec![Int::from(2)],
        }
    }

    /// ⟨a⟩ for an integer representative.
    pub fn class(&self, a: i64) -> Result<Vec<Int>> {
        match self {
            Coefficients::Gw(t) => {
                let e = field_arith::FieldElement::int(t.field(), a);
                if e.is_zero() {
                    return Err(AlgebraError::Presentation(format!("<{a}> is not a unit")));
                }
                Ok(self.unit(t.index_of(&e)?))
            }
            Coefficients::Integers => Ok(self.one()),
        }
    }

    pub fn mul(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        match self {
            Coefficients::Gw(t) => t.mul(a, b),
            Coefficients::Integers => vec![&a[0] * &b[0]],
        }
    }

    pub fn rank(&self, v: &[Int]) -> Int {
        v.iter().sum()
    }

    /// ℤ-linear relations of the coefficient module.
    pub fn relations(&self) -> Vec<Vec<Int>> {
        match self {
            Coefficients::Gw(t) => t.gw_relations().to_vec(),
            Coefficients::Integers => vec![],
        }
    }

    /// Additive generators of the fundamental ideal (zero for ℤ, where the
    /// rank identifies GW with ℤ).
    pub fn i_span(&self) -> Vec<Vec<Int>> {
        match self {
            Coefficients::Gw(t) => t.i_power_span(1),
            Coefficients::Integers => vec![],
        }
    }

    /// Additive generators of the ideal (h).
    pub fn h_span(&self) -> Vec<Vec<Int>> {
        match self {
            Coefficients::Gw(t) => t.h_multiples(),
            Coefficients::Integers => vec![vec![Int::from(2)]],
        }
    }

    pub fn presentation(&self) -> Presentation {
        let mut p = Presentation::new(self.size());
        for r in self.relations() {
            p.push(r);
        }
        p
    }

    pub fn gw_group(&self) -> AbGroup {
        self.presentation().decompose().group
    }

    pub fn w_group(&self) -> AbGroup {
        self.presentation().quotient(&self.h_span()).decompose().group
    }
}
