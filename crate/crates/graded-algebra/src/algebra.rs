use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use zmodule::{AbGroup, Decomposition, Int, Presentation};

use crate::coeff::Coefficients;
use crate::error::{AlgebraError, Result};
use crate::expr::{monomial_name, Atom, Polynomial, Term};
use crate::presentation::{AlgebraPresentation, Mode};

/// A polynomial with coefficients in the coefficient module, keyed by
/// exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Vec<u32>, Vec<Int>>,
}

impl Element {
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Vec<Int>)> {
        self.terms.iter()
    }

    pub fn is_syntactically_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, exps: Vec<u32>, c: Vec<Int>) {
        let slot = self.terms.entry(exps).or_insert_with(|| vec![Int::zero(); c.len()]);
        for (a, b) in slot.iter_mut().zip(c) {
            *a += b;
        }
    }

    fn prune(mut self) -> Element {
        self.terms.retain(|_, c| c.iter().any(|x| !x.is_zero()));
        self
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push(m.clone(), c.clone());
        }
        out.prune()
    }

    pub fn scale(&self, k: i64) -> Element {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.iter().map(|x| x * k).collect())).collect();
        Element { terms }.prune()
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.scale(-1))
    }
}

#[derive(Clone, Debug)]
enum Relation {
    Poly(Element),
    /// span · monomial = 0.
    Annihilator { span: Vec<Vec<Int>>, exps: Vec<u32> },
}

/// The ℤ-module structure of one bidegree.
#[derive(Clone, Debug)]
pub struct Cell {
    pub i: u32,
    pub twist: u8,
    pub monomials: Vec<Vec<u32>>,
    pub presentation: Presentation,
    pub decomposition: Decomposition,
    /// Monomials whose coefficient multiples generate the cell, chosen
    /// greedily by how much of the cell each one covers.
    pub basis: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPieceReport {
    pub i: u32,
    pub twist: String,
    pub factors: Vec<u64>,
    pub free: usize,
    pub basis: Vec<String>,
    #[serde(skip)]
    pub group: AbGroup,
}

pub fn group_factors(g: &AbGroup) -> Vec<u64> {
    g.torsion.iter().map(|d| d.to_u64().expect("invariant factor fits in u64")).collect()
}

/// A presentation together with a coefficient theory, ready to compute.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub presentation: AlgebraPresentation,
    pub coefficients: Coefficients,
    squares: Vec<Option<Element>>,
    relations: Vec<(Relation, u32, u8)>,
}

impl Algebra {
    pub fn new(p: &AlgebraPresentation, c: &Coefficients) -> Result<Algebra> {
        if p.mode == Mode::I {
            return Err(AlgebraError::Unsupported(format!("{} is an I*-presentation; use IAlgebra", p.name)));
        }
        let mut a = Algebra { presentation: p.clone(), coefficients: c.clone(), squares: vec![], relations: vec![] };
        let n = p.generators.len();
        a.squares = vec![None; n];
        for r in &p.relations {
            let Some((i, t)) = p.bidegree(r)? else { continue };
            if r.terms.iter().any(Term::has_ideal) {
                let [term] = r.terms.as_slice() else {
                    return Err(AlgebraError::Presentation("I may only occur in single-term relations".into()));
                };
                let rest = Term { atoms: term.atoms.iter().filter(|x| **x != Atom::Ideal).cloned().collect(), ..term.clone() };
                let k = a.coefficient(&rest)?;
                let span = c.i_span().iter().map(|x| c.mul(x, &k)).collect();
                a.relations.push((Relation::Annihilator { span, exps: term.exps.clone() }, i, t));
                continue;
            }
            let e = a.evaluate(r)?;
            for k in 0..n {
                if a.squares[k].is_some() {
                    continue;
                }
                let mut sq = vec![0; n];
                sq[k] = 2;
                let lead = r.terms.iter().find(|t| t.exps == sq && t.atoms.is_empty() && t.int.abs() == 1);
                let lower = r.terms.iter().filter(|t| t.exps != sq).all(|t| t.exps[k] <= 1);
                if let (Some(lead), true) = (lead, lower) {
                    let mut rest = Element::default();
                    for (m, v) in e.terms.iter().filter(|(m, _)| **m != sq) {
                        rest.push(m.clone(), v.iter().map(|x| -x * lead.int).collect());
                    }
                    a.squares[k] = Some(rest.prune());
                }
            }
            a.relations.push((Relation::Poly(e), i, t));
        }
        for (k, g) in p.generators.iter().enumerate() {
            if g.codim == 0 && a.squares[k].is_none() {
                return Err(AlgebraError::Presentation(format!(
                    "codimension-0 generator {} needs a relation {}^2 = (terms of lower degree in {})",
                    g.name, g.name, g.name
                )));
            }
        }
        Ok(a)
    }

    fn coefficient(&self, t: &Term) -> Result<Vec<Int>> {
        let c = &self.coefficients;
        let mut v = c.int(t.int);
        for a in &t.atoms {
            let f = match a {
                Atom::H => c.h(),
                Atom::Class(x) => c.class(*x)?,
                Atom::Ideal => return Err(AlgebraError::Unsupported("I is not an element".into())),
            };
            v = c.mul(&v, &f);
        }
        Ok(v)
    }

    /// The element denoted by a polynomial (which must not contain I).
    pub fn evaluate(&self, p: &Polynomial) -> Result<Element> {
        let mut e = Element::default();
        for t in &p.terms {
            e.push(t.exps.clone(), self.coefficient(t)?);
        }
        Ok(self.reduce(&e.prune()))
    }

    pub fn parse(&self, s: &str) -> Result<Element> {
        self.evaluate(&self.presentation.parse(s)?)
    }

    pub fn generator(&self, name: &str) -> Result<Element> {
        self.parse(name)
    }

    pub fn constant(&self, v: Vec<Int>) -> Element {
        let mut e = Element::default();
        e.push(vec![0; self.presentation.generators.len()], v);
        e.prune()
    }

    /// Rewrites squares of capped generators until every monomial is in the
    /// capped range.
    pub fn reduce(&self, e: &Element) -> Element {
        let mut out = Element::default();
        let mut stack: Vec<(Vec<u32>, Vec<Int>)> = e.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        while let Some((m, c)) = stack.pop() {
            let hit = (0..m.len()).find(|&k| m[k] >= 2 && self.squares[k].is_some());
            match hit {
                None => out.push(m, c),
                Some(k) => {
                    for (m2, c2) in &self.squares[k].as_ref().unwrap().terms {
                        let mut m3: Vec<u32> = m.iter().zip(m2).map(|(a, b)| a + b).collect();
                        m3[k] -= 2;
                        stack.push((m3, self.coefficients.mul(&c, c2)));
                    }
                }
            }
        }
        out.prune()
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::default();
        for (m, c) in &a.terms {
            for (m2, c2) in &b.terms {
                out.push(m.iter().zip(m2).map(|(x, y)| x + y).collect(), self.coefficients.mul(c, c2));
            }
        }
        self.reduce(&out.prune())
    }

    pub fn pow(&self, a: &Element, k: u32) -> Element {
        let mut out = self.constant(self.coefficients.one());
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    pub fn bidegree(&self, e: &Element) -> Result<Option<(u32, u8)>> {
        let p = &self.presentation;
        let mut out = None;
        for m in e.terms.keys() {
            let d = (p.codim(m), p.twist(m));
            match out {
                Some(x) if x != d => return Err(AlgebraError::Inhomogeneous(self.display(e))),
                _ => out = Some(d),
            }
        }
        Ok(out)
    }

    /// Writes an element in the input syntax, e.g. `24*T^2 - <2>*T*H`.
    pub fn display(&self, e: &Element) -> String {
        let names = self.presentation.names();
        let mut parts: Vec<String> = vec![];
        for (m, c) in &e.terms {
            let c = self.collapse(m, c);
            for (k, x) in c.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let mut body = vec![];
                if k > 0 {
                    body.push(format!("<{}>", self.coefficients.class_label(k)));
                }
                if m.iter().any(|&a| a > 0) {
                    body.push(monomial_name(&names, m));
                }
                let body = body.join("*");
                parts.push(match (x.to_string().as_str(), body.is_empty()) {
                    (s, true) => s.to_string(),
                    ("1", false) => body,
                    ("-1", false) => format!("-{body}"),
                    (s, false) => format!("{s}*{body}"),
                });
            }
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }

    fn capped(&self, k: usize) -> bool {
        self.squares[k].is_some()
    }

    /// Exponent vectors of codimension i and twist t, within the caps
    /// given by the square relations; lexicographically ordered.
    pub fn monomials(&self, i: u32, t: u8) -> Vec<Vec<u32>> {
        let p = &self.presentation;
        let n = p.generators.len();
        let mut out = vec![];
        let mut cur = vec![0u32; n];
        self.enumerate(0, i, &mut cur, &mut out);
        out.retain(|m| p.twist(m) == t);
        out.sort();
        out
    }

    fn enumerate(&self, k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let gens = &self.presentation.generators;
        if k == gens.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let c = gens[k].codim;
        let max = if self.capped(k) { 1 } else { left / c };
        for e in 0..=max {
            if e * c > left {
                break;
            }
            cur[k] = e;
            self.enumerate(k + 1, left - e * c, cur, out);
        }
        cur[k] = 0;
    }

    pub(crate) fn vector(&self, monos: &[Vec<u32>], e: &Element) -> Vec<Int> {
        let r = self.coefficients.size();
        let mut v = vec![Int::zero(); monos.len() * r];
        for (m, c) in &e.terms {
            let k = monos.binary_search(m).expect("monomial in cell");
            for (j, x) in c.iter().enumerate() {
                v[k * r + j] += x;
            }
        }
        v
    }

    /// coef · monomial.
    pub fn monomial(&self, m: &[u32], coef: Vec<Int>) -> Element {
        let mut e = Element::default();
        e.push(m.to_vec(), coef);
        e.prune()
    }

    fn cell_relations(&self, i: u32, t: u8, monos: &[Vec<u32>]) -> Vec<Vec<Int>> {
        let c = &self.coefficients;
        let r = c.size();
        let mut rows = vec![];
        for k in 0..monos.len() {
            for rel in c.relations() {
                let mut v = vec![Int::zero(); monos.len() * r];
                v[k * r..(k + 1) * r].clone_from_slice(&rel);
                rows.push(v);
            }
        }
        for (rel, ri, rt) in &self.relations {
            if *ri > i {
                continue;
            }
            for m in self.monomials(i - ri, (t + rt) % 2) {
                match rel {
                    Relation::Poly(e) => {
                        for g in 0..r {
                            let x = self.mul(&self.monomial(&m, c.unit(g)), e);
                            rows.push(self.vector(monos, &x));
                        }
                    }
                    Relation::Annihilator { span, exps } => {
                        for s in span {
                            let x = self.mul(&self.monomial(&m, s.clone()), &self.monomial(exps, c.one()));
                            rows.push(self.vector(monos, &x));
                        }
                    }
                }
            }
        }
        rows
    }

    pub fn cell(&self, i: u32, t: u8) -> Cell {
        let monos = self.monomials(i, t);
        let r = self.coefficients.size();
        let mut pres = Presentation::new(monos.len() * r);
        for row in self.cell_relations(i, t, &monos) {
            pres.push(row);
        }
        let decomposition = pres.decompose();
        let r_rows = |k: usize| -> Vec<Vec<Int>> {
            (0..r)
                .map(|g| {
                    let mut v = vec![Int::zero(); monos.len() * r];
                    v[k * r + g] = Int::from(1);
                    v
                })
                .collect()
        };
        let size = |g: &AbGroup| (g.free, g.order().unwrap_or_default());
        let mut chosen = vec![];
        let mut span: Vec<Vec<Int>> = vec![];
        let mut rest = decomposition.group.clone();
        while !rest.is_trivial() {
            let best = (0..monos.len())
                .filter(|k| !chosen.contains(k))
                .map(|k| {
                    let mut s = span.clone();
                    s.extend(r_rows(k));
                    (k, pres.quotient(&s).decompose().group)
                })
                .min_by(|(_, g), (_, h)| size(g).cmp(&size(h)))
                .expect("a nontrivial cell has monomials");
            chosen.push(best.0);
            span.extend(r_rows(best.0));
            rest = best.1;
        }
        chosen.sort();
        let basis = chosen.into_iter().map(|k| monos[k].clone()).collect();
        Cell { i, twist: t, monomials: monos, presentation: pres, decomposition, basis }
    }

    pub fn graded_piece(&self, i: u32, t: u8) -> GradedPieceReport {
        let cell = self.cell(i, t);
        let names = self.presentation.names();
        let group = cell.decomposition.group.clone();
        GradedPieceReport {
            i,
            twist: self.presentation.twist_label(t),
            factors: group_factors(&group),
            free: group.free,
            basis: cell.basis.iter().map(|m| monomial_name(&names, m)).collect(),
            group,
        }
    }

    /// Coordinates of a homogeneous element on the cyclic generators of its
    /// cell, together with the cell's bidegree.
    pub fn coordinates(&self, e: &Element) -> Result<(u32, u8, Vec<Int>)> {
        let e = self.reduce(e);
        let Some((i, t)) = self.bidegree(&e)? else {
            return Ok((0, 0, vec![]));
        };
        let cell = self.cell(i, t);
        let v = self.vector(&cell.monomials, &e);
        Ok((i, t, cell.decomposition.coordinates(&v)))
    }

    pub fn is_zero(&self, e: &Element) -> Result<bool> {
        Ok(self.coordinates(e)?.2.iter().all(|x| x.is_zero()))
    }

    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool> {
        self.is_zero(&a.sub(b))
    }

    /// The coefficient module seen by a monomial: GW(k) modulo the
    /// annihilators of the generators dividing it (relations `I*X`, `h*X`).
    pub fn coefficient_module(&self, m: &[u32]) -> AbGroup {
        self.coefficient_presentation(m).decompose().group
    }

    fn coefficient_presentation(&self, m: &[u32]) -> Presentation {
        let c = &self.coefficients;
        let divides = |x: &[u32]| x.iter().zip(m).all(|(a, b)| a <= b);
        let mut p = c.presentation();
        for (rel, _, _) in &self.relations {
            match rel {
                Relation::Annihilator { span, exps } if divides(exps) => {
                    for s in span {
                        p.push(s.clone());
                    }
                }
                Relation::Poly(e) if e.terms.len() == 1 => {
                    let (x, v) = e.terms.iter().next().unwrap();
                    if divides(x) && x.iter().sum::<u32>() == 1 {
                        for g in 0..c.size() {
                            p.push(c.mul(v, &c.unit(g)));
                        }
                    }
                }
                _ => {}
            }
        }
        p
    }

    /// Folds `<a>*X` into `X` when I kills X, for display.
    fn collapse(&self, m: &[u32], c: &[Int]) -> Vec<Int> {
        if c.iter().skip(1).all(|x| x.is_zero()) {
            return c.to_vec();
        }
        let d = self.coefficient_presentation(m).decompose();
        let one = self.coefficients.unit(0);
        let killed = (1..c.len()).all(|k| {
            let diff: Vec<Int> = self.coefficients.unit(k).iter().zip(&one).map(|(a, b)| a - b).collect();
            d.is_zero(&diff)
        });
        if !killed {
            return c.to_vec();
        }
        let mut out = vec![Int::zero(); c.len()];
        out[0] = c.iter().sum();
        out
    }
}
