use serde::{Deserialize, Serialize};
use zmodule::AbGroup;

use crate::algebra::group_factors;
use crate::coeff::Coefficients;
use crate::error::{AlgebraError, Result};
use crate::expr::{monomial_name, Atom};
use crate::presentation::{AlgebraPresentation, Mode};
use qf_gw::CoefficientTheory;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IPieceReport {
    pub i: u32,
    pub j: i32,
    pub twist: String,
    pub factors: Vec<u64>,
    pub free: usize,
    pub basis: Vec<String>,
    #[serde(skip)]
    pub group: AbGroup,
}

/// I*-cohomology presented as W(k)[generators]/(relations). Supported
/// relations: `I*X` (X generates a module over k^M_* = I^*/I^{*+1}, which
/// vanishes in negative degrees) and monomials (which vanish).
#[derive(Clone, Debug)]
pub struct IAlgebra {
    pub presentation: AlgebraPresentation,
    theory: CoefficientTheory,
    annihilated: Vec<Vec<u32>>,
    killed: Vec<Vec<u32>>,
}

impl IAlgebra {
    pub fn new(p: &AlgebraPresentation, c: &Coefficients) -> Result<IAlgebra> {
        if p.mode != Mode::I {
            return Err(AlgebraError::Unsupported(format!("{} is not an I*-presentation", p.name)));
        }
        let theory = c
            .theory()
            .cloned()
            .ok_or_else(|| AlgebraError::Unsupported("I*-cohomology needs a field".into()))?;
        let mut annihilated = vec![];
        let mut killed = vec![];
        for r in &p.relations {
            match r.terms.as_slice() {
                [t] if t.atoms == [Atom::Ideal] && t.int == 1 => annihilated.push(t.exps.clone()),
                [t] if t.atoms.is_empty() && t.int.abs() == 1 => killed.push(t.exps.clone()),
                _ => {
                    return Err(AlgebraError::Unsupported(format!(
                        "relation {} in an I*-presentation",
                        r.display(&p.names())
                    )))
                }
            }
        }
        if let Some(g) = p.generators.iter().find(|g| g.codim == 0) {
            return Err(AlgebraError::Unsupported(format!("codimension-0 generator {} in I*-mode", g.name)));
        }
        Ok(IAlgebra { presentation: p.clone(), theory, annihilated, killed })
    }

    pub fn monomials(&self, i: u32, t: u8) -> Vec<Vec<u32>> {
        let p = &self.presentation;
        let mut out = vec![];
        let mut cur = vec![0u32; p.generators.len()];
        fn go(p: &AlgebraPresentation, k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if k == p.generators.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let c = p.generators[k].codim;
            for e in 0..=left / c {
                cur[k] = e;
                go(p, k + 1, left - e * c, cur, out);
            }
            cur[k] = 0;
        }
        go(p, 0, i, &mut cur, &mut out);
        let divides = |x: &Vec<u32>, m: &Vec<u32>| x.iter().zip(m).all(|(a, b)| a <= b);
        out.retain(|m| p.twist(m) == t && !self.killed.iter().any(|x| divides(x, m)));
        out.sort();
        out
    }

    /// The summand contributed by a monomial in weight j.
    pub fn summand(&self, m: &[u32], j: i32) -> AbGroup {
        let c = j - self.presentation.weight(m);
        let ann = self.annihilated.iter().any(|x| x.iter().zip(m).all(|(a, b)| a <= b));
        match (ann, c) {
            (true, c) if c < 0 => AbGroup::zero(),
            (true, c) => self.theory.kbar(c as u32),
            (false, c) if c <= 0 => self.theory.w_group(),
            (false, c) => self.theory.i_power_group(c as u32),
        }
    }

    pub fn piece(&self, i: u32, j: i32, t: u8) -> IPieceReport {
        let names = self.presentation.names();
        let mut group = AbGroup::zero();
        let mut basis = vec![];
        for m in self.monomials(i, t) {
            let g = self.summand(&m, j);
            if !g.is_trivial() {
                basis.push(monomial_name(&names, &m));
                group = group.direct_sum(&g);
            }
        }
        IPieceReport {
            i,
            j,
            twist: self.presentation.twist_label(t),
            factors: group_factors(&group),
            free: group.free,
            basis,
            group,
        }
    }
}
