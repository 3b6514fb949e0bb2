use field_arith::{BaseField, FieldElement};
use qf_gw::SquareClass;

use crate::expr::{MWExpr, Word};

/// Optional rewrite rules.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NormalizeOptions {
    /// Sort symbols using [a][b] = ε[b][a], ε = −⟨−1⟩.
    pub eps_commute: bool,
}

pub fn mw_normalize(x: &MWExpr) -> MWExpr {
    mw_normalize_with(x, NormalizeOptions::default())
}

/// Rewrites to a fixpoint: drop words containing [1]; η²[−1] = −2η; drop
/// words with an adjacent [a][1−a]; [s·u²] = [s] + 2[u] + η[−1][u] when the square
/// factor is visible over a field of characteristic 0 with rational constants;
/// optionally ε-commutation.
pub fn mw_normalize_with(x: &MWExpr, opts: NormalizeOptions) -> MWExpr {
    let mut cur = x.clone();
    loop {
        let next = step(&cur, opts);
        if next == cur {
            return next;
        }
        cur = next;
    }
}

fn step(x: &MWExpr, opts: NormalizeOptions) -> MWExpr {
    let field = x.field();
    let mut out = MWExpr::zero(field);
    for (w, c) in x.terms() {
        for (w, c) in rewrite(w, c, opts) {
            out.add_term(w, c);
        }
    }
    out
}

fn rewrite(w: &Word, c: i64, opts: NormalizeOptions) -> Vec<(Word, i64)> {
    if w.symbols.iter().any(|a| a.is_one()) {
        return vec![];
    }
    if w.eta >= 2 {
        if let Some(i) = w.symbols.iter().position(|a| a.neg().is_one()) {
            let mut symbols = w.symbols.clone();
            symbols.remove(i);
            return vec![(Word { eta: w.eta - 1, symbols }, -2 * c)];
        }
    }
    let one = |a: &FieldElement| FieldElement::one(a.field());
    if w.symbols.windows(2).any(|p| p[0].add(&p[1]) == one(&p[0])) {
        return vec![];
    }
    for (i, a) in w.symbols.iter().enumerate() {
        if let Some((s, u)) = split_square(a) {
            let with = |mid: Vec<FieldElement>, eta: u32| {
                let mut symbols = w.symbols[..i].to_vec();
                symbols.extend(mid);
                symbols.extend(w.symbols[i + 1..].iter().cloned());
                Word { eta: w.eta + eta, symbols }
            };
            let m1 = FieldElement::int(a.field(), -1);
            return vec![(with(vec![s], 0), c), (with(vec![u.clone()], 0), 2 * c), (with(vec![m1, u], 1), c)];
        }
    }
    if opts.eps_commute {
        if let Some(out) = eps_sort(w, c) {
            return out;
        }
    }
    vec![(w.clone(), c)]
}

fn eps_sort(w: &Word, c: i64) -> Option<Vec<(Word, i64)>> {
    let mut symbols = w.symbols.clone();
    let mut swaps = 0usize;
    for i in 1..symbols.len() {
        let mut j = i;
        while j > 0 && symbols[j - 1] > symbols[j] {
            symbols.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if swaps == 0 {
        return None;
    }
    let sorted = Word { eta: w.eta, symbols: symbols.clone() };
    if w.eta > 0 || swaps % 2 == 0 {
        return Some(vec![(sorted, c)]);
    }
    let m1 = FieldElement::int(w.symbols[0].field(), -1);
    let mut with_m1 = vec![m1];
    with_m1.extend(symbols);
    Some(vec![(sorted, -c), (Word { eta: 1, symbols: with_m1 }, -c)])
}

fn complexity(a: &FieldElement) -> (u32, u64) {
    let polys = [a.numerator(), a.denominator()];
    let deg = polys.iter().map(|p| p.total_degree()).sum();
    let bits = polys.iter().flat_map(|p| p.terms()).map(|(_, c)| c.numer().bits() + c.denom().bits()).sum();
    (deg, bits)
}

/// `a = s·u²` with `s` the square-class representative and `u` strictly simpler than `a`.
fn split_square(a: &FieldElement) -> Option<(FieldElement, FieldElement)> {
    if a.field().base != BaseField::Rationals {
        return None;
    }
    let s = SquareClass::of(a).ok()?.rep().clone();
    if &s == a {
        return None;
    }
    let u = a.div(&s).ok()?.sqrt()?;
    (complexity(&u) < complexity(a) && !u.is_one() && !u.neg().is_one()).then_some((s, u))
}
