use qf_gw::{gw_compare, witt_compare, Decision, GWElement};

use crate::error::{MwError, Result};
use crate::eval::pfister_sum;
use crate::expr::MWExpr;
use crate::normalize::mw_normalize;
use crate::project::{milnor_zero, project};

/// Outcome of [`mw_compare`] with the decisions on each leg of the square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub decision: Decision,
    pub degree: i64,
    /// Equality of the K^M_n images (degree ≥ 1 only).
    pub milnor: Option<Decision>,
    /// Equality of the Iⁿ (degree ≥ 1), GW (degree 0) or W (negative degree) images.
    pub witt: Decision,
}

/// Decides x = y in K^MW_n(F).
///
/// Degree ≤ 0 goes through K^MW_0 ≅ GW and K^MW_{−n} ≅ W; positive degree
/// through the cartesian square K^MW_n = K^M_n ×_{k^M_n} Iⁿ.
pub fn mw_compare(x: &MWExpr, y: &MWExpr) -> Result<Comparison> {
    let (dx, dy) = (x.degree()?, y.degree()?);
    let degree = match (dx, dy) {
        (Some(a), Some(b)) if a != b => return Err(MwError::Degree { expected: a.to_string(), found: b }),
        (Some(a), _) | (_, Some(a)) => a,
        (None, None) => 0,
    };
    let d = mw_normalize(&x.try_add(&y.neg())?);
    let zero = GWElement::zero(d.field());
    let value = pfister_sum(&d)?;
    if degree == 0 {
        let witt = gw_compare(&value, &zero)?;
        return Ok(Comparison { decision: witt, degree, milnor: None, witt });
    }
    let witt = witt_compare(&value, &zero)?;
    if degree < 0 {
        return Ok(Comparison { decision: witt, degree, milnor: None, witt });
    }
    let milnor = milnor_zero(&project(&d)?.milnor);
    Ok(Comparison { decision: milnor.and(witt), degree, milnor: Some(milnor), witt })
}

pub fn mw_equal(x: &MWExpr, y: &MWExpr) -> Result<Decision> {
    Ok(mw_compare(x, y)?.decision)
}
