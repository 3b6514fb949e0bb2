use std::collections::BTreeSet;

use field_arith::{DivisorMode, FieldElement, FieldRef};
use mw_symbols::{mw_equal, mw_normalize, Decision, MWExpr, TwistedMWExpr, Word};

use crate::context::{ResidueResult, ValuationContext};
use crate::error::{ResidueError, Result};

/// n_ε = Σ_{k<n} ⟨(−1)^k⟩ for n ≥ 0 and −⟨−1⟩·(−n)_ε for n < 0, so that
/// [π^n] = n_ε[π].
pub fn eps_integer(field: &FieldRef, n: i64) -> MWExpr {
    let m1 = FieldElement::int(field, -1);
    let m = n.abs();
    let pos = MWExpr::from_terms(field, [(Word::one(), m), (Word { eta: 1, symbols: vec![m1.clone()] }, m / 2)]);
    if n >= 0 {
        pos
    } else {
        mw_normalize(&MWExpr::epsilon(field).mul(&pos))
    }
}

#[derive(Clone)]
enum Piece {
    Unit(FieldElement),
    Pi,
}

/// The twisted residue ∂^π_ν(x) ⊗ π̄^∨ along one divisor.
///
/// Each entry is split as a = π^e·u, [a] = [u] + ⟨u⟩e_ε[π], the product is
/// expanded, the [π] are moved to the front with [u][π] = ε[π][u], and
/// [π]^k = [π][−1]^{k−1}; then ∂([π][ū₂,…]) = [ū₂,…] and unit words vanish.
pub fn residue_at(x: &TwistedMWExpr, ctx: &ValuationContext) -> Result<ResidueResult> {
    x.expr.degree()?;
    let x = ctx.transport(x)?;
    let big = ctx.field().clone();
    let small = ctx.divisor.residue_field();
    let pi0 = ctx.divisor.pi();

    let mut mult = FieldElement::one(&big);
    let mut labels = vec![];
    let mut cancelled = false;
    for (label, u) in &x.twist {
        let g = ctx.generator(label).ok_or_else(|| ResidueError::UnknownTwist(label.clone()))?;
        mult = mult.mul(&u.div(g)?);
        if g == pi0 && !cancelled {
            cancelled = true;
        } else {
            labels.push(label.clone());
        }
    }

    let pi = &ctx.uniformizer;
    let ratio = pi.div(pi0)?;
    let mut expr = x.expr.clone();
    if ctx.divisor.valuation(&mult)? % 2 != 0 {
        expr = MWExpr::unit_form(&mult)?.try_mul(&expr)?;
        mult = ratio;
    } else {
        mult = mult.mul(&ratio);
    }
    let mult = ctx.divisor.specialize(&ctx.divisor.unit_part(&mult)?)?;
    let m1 = FieldElement::int(&small, -1);
    let mut out = MWExpr::zero(&small);
    for (w, c) in expr.terms() {
        let mut factors: Vec<Vec<(FieldElement, i64, Piece)>> = vec![];
        for a in &w.symbols {
            let e = ctx.divisor.valuation(a)?;
            let u = a.div(&pi.pow(e)?)?;
            let mut opts = vec![];
            if !u.is_one() {
                opts.push((FieldElement::one(&big), 0, Piece::Unit(u.clone())));
            }
            if e != 0 {
                opts.push((u, e, Piece::Pi));
            }
            factors.push(opts);
        }
        let mut choices: Vec<(FieldElement, Vec<i64>, Vec<Piece>)> = vec![(mult.clone(), vec![], vec![])];
        for opts in &factors {
            let mut next = vec![];
            for (m, es, pieces) in &choices {
                for (u, e, p) in opts {
                    let mut pieces = pieces.clone();
                    pieces.push(p.clone());
                    let mut es = es.clone();
                    let mut m = m.clone();
                    if *e != 0 {
                        es.push(*e);
                        m = m.mul(&ctx.divisor.specialize(u)?);
                    }
                    next.push((m, es, pieces));
                }
            }
            choices = next;
        }
        for (m, es, pieces) in choices {
            let mut k = 0;
            let mut swaps = 0;
            let mut units = vec![];
            for p in &pieces {
                match p {
                    Piece::Pi => {
                        k += 1;
                        swaps += units.len();
                    }
                    Piece::Unit(u) => units.push(ctx.divisor.specialize(u)?),
                }
            }
            if k == 0 {
                continue;
            }
            let mut symbols = vec![m1.clone(); k - 1];
            symbols.extend(units);
            let mut term = MWExpr::word(&small, Word::new(w.eta, symbols)?).scale(c);
            for e in es {
                term = eps_integer(&small, e).mul(&term);
            }
            if m.sqrt().is_none() {
                term = MWExpr::unit_form(&m)?.mul(&term);
            }
            if swaps % 2 == 1 {
                term = MWExpr::epsilon(&small).mul(&term);
            }
            out = out.add(&term);
        }
    }

    let mut twist = vec![];
    if !cancelled {
        let name = match ctx.divisor.mode() {
            DivisorMode::CoordinateVariable(v) => v.clone(),
            DivisorMode::Symbolic => ctx.label().to_string(),
        };
        twist.push(format!("{name}^∨"));
    }
    twist.extend(labels);
    Ok(ResidueResult { divisor: ctx.label().to_string(), value: mw_normalize(&out), twist })
}

fn vanishes(r: &ResidueResult) -> Result<bool> {
    if r.value.is_zero() {
        return Ok(true);
    }
    Ok(mw_equal(&r.value, &MWExpr::zero(r.value.field()))? == Decision::Equal)
}

/// Residues along each listed divisor, omitting those that vanish.
pub fn total_boundary(x: &TwistedMWExpr, divisors: &[ValuationContext]) -> Result<Vec<ResidueResult>> {
    let mut seen = BTreeSet::new();
    let mut out = vec![];
    for ctx in divisors {
        if !seen.insert(ctx.label().to_string()) {
            return Err(ResidueError::DuplicateDivisor(ctx.label().into()));
        }
        let r = residue_at(x, ctx)?;
        if !vanishes(&r)? {
            out.push(r);
        }
    }
    Ok(out)
}

/// Labels of the divisors among `extra` where `x` has a nonzero residue.
pub fn spot_check(x: &TwistedMWExpr, extra: &[ValuationContext]) -> Result<Vec<String>> {
    let mut out = vec![];
    for ctx in extra {
        if !vanishes(&residue_at(x, ctx)?)? {
            out.push(ctx.label().to_string());
        }
    }
    Ok(out)
}
