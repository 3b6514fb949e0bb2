use serde::{Deserialize, Serialize};
use zmodule::AbGroup;

use crate::algebra::{group_factors, Algebra, Element};
use crate::coeff::Coefficients;
use crate::error::{AlgebraError, Result};
use crate::expr::{Atom, Polynomial, Term};
use crate::presentation::{AlgebraPresentation, GeneratorSpec, Mode};

/// e(𝒰^{⊗m}) in an algebra containing T and H: m = −2n gives nTH,
/// m = −(2n+1) gives (2n+1)T, and m > 0 is extrapolated as −e(𝒰^{⊗−m}).
pub fn euler_class(a: &Algebra, m: i64) -> Result<Element> {
    if m == 0 {
        return Err(AlgebraError::ZeroEuler);
    }
    if m > 0 {
        return Ok(euler_class(a, -m)?.scale(-1));
    }
    let k = -m;
    if k % 2 == 0 {
        a.parse(&format!("{}*T*H", k / 2))
    } else {
        a.parse(&format!("{k}*T"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CokernelCell {
    pub i: u32,
    pub twist: String,
    pub cokernel: Vec<u64>,
    pub cokernel_free: usize,
    pub target: Vec<u64>,
    pub target_free: usize,
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CokernelReport {
    pub source: String,
    pub target: String,
    pub multiplier: String,
    pub cells: Vec<CokernelCell>,
    pub all_match: bool,
}

/// coker(e·: source(i − deg e, t + tw e) → source(i, t)).
pub fn cokernel(source: &Algebra, e: &Element, i: u32, t: u8) -> Result<AbGroup> {
    let cell = source.cell(i, t);
    let Some((ei, et)) = source.bidegree(e)? else {
        return Ok(cell.decomposition.group);
    };
    let mut extra = vec![];
    if ei <= i {
        let c = &source.coefficients;
        for m in source.monomials(i - ei, (t + et) % 2) {
            for g in 0..c.size() {
                let y = source.mul(&source.monomial(&m, c.unit(g)), e);
                extra.push(source.vector(&cell.monomials, &y));
            }
        }
    }
    Ok(cell.presentation.quotient(&extra).decompose().group)
}

/// Compares cokernels of multiplication by an Euler class on the source with
/// the graded pieces of the target, cell by cell. Cells with i = 0 (where the
/// localization sequence gives an extension) are skipped.
pub fn localization_cokernel_check(
    source: &Algebra,
    target: &Algebra,
    e: &Element,
    cells: &[(u32, u8)],
) -> Result<CokernelReport> {
    let mut out = vec![];
    for &(i, t) in cells {
        let twist = target.presentation.twist_label(t);
        if i == 0 {
            out.push(CokernelCell {
                i,
                twist,
                cokernel: vec![],
                cokernel_free: 0,
                target: vec![],
                target_free: 0,
                matches: true,
                skipped: Some("codimension 0: the localization sequence gives an extension".into()),
            });
            continue;
        }
        let coker = cokernel(source, e, i, t)?;
        let piece = target.graded_piece(i, t).group;
        out.push(CokernelCell {
            i,
            twist,
            cokernel: group_factors(&coker),
            cokernel_free: coker.free,
            target: group_factors(&piece),
            target_free: piece.free,
            matches: coker == piece,
            skipped: None,
        });
    }
    let all_match = out.iter().all(|c| c.matches);
    Ok(CokernelReport {
        source: source.presentation.name.clone(),
        target: target.presentation.name.clone(),
        multiplier: source.display(e),
        cells: out,
        all_match,
    })
}

/// The image under the rank map to classical Chow rings: GW-coefficients go
/// to their rank (h ↦ 2, ⟨a⟩ ↦ 1, I ↦ 0), generators with a `chow` value
/// are replaced by it, and twists are forgotten.
pub fn rank_collapse(p: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    if p.mode != Mode::Cw {
        return Err(AlgebraError::Unsupported(format!("rank collapse of {}", p.name)));
    }
    let keep: Vec<usize> = (0..p.generators.len()).filter(|&k| p.generators[k].chow.is_none()).collect();
    let generators: Vec<GeneratorSpec> = keep
        .iter()
        .map(|&k| GeneratorSpec { twist: 0, weight: None, chow: None, ..p.generators[k].clone() })
        .collect();
    let mut relations = vec![];
    for r in &p.relations {
        let mut terms = vec![];
        for t in &r.terms {
            if t.has_ideal() {
                continue;
            }
            let mut c = t.int;
            for a in &t.atoms {
                if *a == Atom::H {
                    c *= 2;
                }
            }
            for (k, g) in p.generators.iter().enumerate() {
                if let Some(v) = g.chow {
                    c *= v.pow(t.exps[k]);
                }
            }
            if c != 0 {
                terms.push(Term { int: c, atoms: vec![], exps: keep.iter().map(|&k| t.exps[k]).collect() });
            }
        }
        let mut merged: Vec<Term> = vec![];
        for t in terms {
            match merged.iter_mut().find(|u| u.exps == t.exps) {
                Some(u) => u.int += t.int,
                None => merged.push(t),
            }
        }
        merged.retain(|t| t.int != 0);
        if !merged.is_empty() {
            relations.push(Polynomial { terms: merged });
        }
    }
    Ok(AlgebraPresentation {
        name: format!("rank({})", p.name),
        mode: Mode::Chow,
        twist_name: "O".into(),
        generators,
        relations,
        coefficients: Some("Z".into()),
    })
}

pub fn chow_algebra(p: &AlgebraPresentation) -> Result<Algebra> {
    Algebra::new(p, &Coefficients::Integers)
}
