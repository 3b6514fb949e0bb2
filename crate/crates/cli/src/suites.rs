use std::collections::BTreeMap;

use field_arith::{Field, FieldElement, PrimeDivisor};
use graded_algebra::{
    chow_algebra, euler_class, localization_cokernel_check, preset, rank_collapse, table, Algebra,
    AlgebraPresentation, Coefficients, IAlgebra,
};
use mw_symbols::{eval_gw, mw_equal, mw_normalize_with, parse_expr, Decision, NormalizeOptions, TwistedMWExpr};
use qf_gw::{gw_equal, parse_form};
use residue::{chart_preset, residue_at, verify_boundary_relation, ValuationContext};
use zmodule::AbGroup;

use crate::error::{CliError, Result};
use crate::fixtures::{builtin, Body, CellRule, Fixture, Fixtures};
use crate::groups::{degree_matches, eval_group, with_n, GroupEnv, Vars};
use crate::oracle::{compare_with_enumeration, derived_coefficients};
use crate::report::{Check, Environment, Status, VerificationReport, COMMUTATIVITY};

pub const SUITES: [&str; 6] = ["bgm", "bmu", "mbar", "mcal", "appendix", "all"];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub field: String,
    /// Overrides the fixture's values of n.
    pub n: Option<u32>,
    pub max_degree: u32,
    pub eps_commute: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { field: "C".into(), n: None, max_degree: 6, eps_commute: false }
    }
}

/// Outcome of one fixture entry before it is labelled.
struct Outcome {
    status: Status,
    detail: String,
}

impl Outcome {
    fn from_mismatches(total: usize, what: &str, bad: Vec<String>) -> Outcome {
        if bad.is_empty() {
            Outcome { status: Status::Pass, detail: format!("{total} {what} match") }
        } else {
            Outcome { status: Status::Fail, detail: format!("{} of {total} {what} differ: {}", bad.len(), bad.join("; ")) }
        }
    }
}

pub fn run_suite(suite: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    run_with(&builtin(), suite, opts)
}

pub fn run_with(fixtures: &Fixtures, suite: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    if !SUITES.contains(&suite) {
        return Err(CliError::Usage(format!("unknown suite {suite}; expected one of {}", SUITES.join(", "))));
    }
    let coeffs = Coefficients::parse(&opts.field)?;
    let mut checks = vec![];
    for f in fixtures.check.iter().filter(|f| suite == "all" || f.suite == suite) {
        let ns: Vec<Option<u32>> = match (&f.n, opts.n) {
            (None, _) => vec![None],
            (Some(_), Some(n)) => vec![Some(n)],
            (Some(list), None) => list.iter().copied().map(Some).collect(),
        };
        for n in ns {
            let id = match n {
                Some(n) => format!("{}[n={n}]", f.id),
                None => f.id.clone(),
            };
            let out = run_check(f, n.unwrap_or(1), &coeffs, opts).unwrap_or_else(|e| Outcome {
                status: Status::Fail,
                detail: format!("error: {e}"),
            });
            checks.push(Check { id, anchor: f.anchor.clone(), tag: f.tag.clone(), status: out.status, detail: out.detail });
        }
    }
    let status = checks.iter().fold(Status::Pass, |s, c| s.combine(c.status));
    Ok(VerificationReport {
        suite: suite.into(),
        assumptions: vec![COMMUTATIVITY.into()],
        environment: Environment {
            field: opts.field.clone(),
            n: opts.n,
            max_degree: opts.max_degree,
            eps_commute: opts.eps_commute,
        },
        checks,
        status,
    })
}

fn algebra(name: &str, n: u32, c: &Coefficients) -> Result<Algebra> {
    Ok(Algebra::new(&preset(&with_n(name, n))?, c)?)
}

fn env<'a>(c: &'a Coefficients, vars: Vars) -> GroupEnv<'a> {
    GroupEnv { gw: c.gw_group(), w: c.w_group(), theory: c.theory(), vars }
}

fn rule<'a>(rules: &'a [CellRule], p: &AlgebraPresentation, i: u32, t: u8) -> Result<Option<&'a CellRule>> {
    for r in rules {
        let twist_ok = match &r.twist {
            Some(s) => p.parse_twist(s)? == t,
            None => true,
        };
        if twist_ok && degree_matches(&r.degrees, i)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

fn run_check(f: &Fixture, n: u32, c: &Coefficients, opts: &VerifyOptions) -> Result<Outcome> {
    let max = opts.max_degree;
    match &f.body {
        Body::Coefficients { field, gw, w } => {
            let theory = Coefficients::parse(field)?;
            let (dgw, dw) = derived_coefficients(field)?;
            let e = GroupEnv { gw: AbGroup::zero(), w: AbGroup::zero(), theory: None, vars: Vars::default() };
            let (egw, ew) = (eval_group(gw, &e)?, eval_group(w, &e)?);
            let mut bad = vec![];
            for (what, fixture, oracle, engine) in
                [("GW", &egw, &dgw, theory.gw_group()), ("W", &ew, &dw, theory.w_group())]
            {
                if fixture != oracle || *oracle != engine {
                    bad.push(format!("{what}({field}): fixture {fixture}, oracle {oracle}, engine {engine}"));
                }
            }
            Ok(Outcome::from_mismatches(2, "groups", bad))
        }
        Body::Oracle { fields, max_rank } => {
            let mut total = 0;
            let mut bad = vec![];
            for field in fields {
                let p: u64 = field
                    .strip_prefix('F')
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| CliError::Fixture(format!("oracle field {field}")))?;
                let (k, b) = compare_with_enumeration(p, *max_rank)?;
                total += k;
                bad.extend(b.into_iter().map(|s| format!("{field}: {s}")));
            }
            Ok(Outcome::from_mismatches(total, "pairs", bad))
        }
        Body::MwValue { field, expr, form } => {
            let k = Field::parse(field)?;
            let x = mw_normalize_with(&parse_expr(&k, expr)?, NormalizeOptions { eps_commute: opts.eps_commute });
            let (got, want) = (eval_gw(&x)?, parse_form(&k, form)?);
            let ok = gw_equal(&got, &want)?;
            Ok(Outcome { status: if ok { Status::Pass } else { Status::Fail }, detail: format!("{expr} = {got}") })
        }
        Body::Residue { field, divisor, label, expr, value, twist } => {
            let k = Field::parse(field)?;
            let ctx = residue_context(&k, divisor, label.as_deref(), None)?;
            let r = residue_at(&TwistedMWExpr::untwisted(parse_expr(&k, expr)?), &ctx)?;
            let want = parse_expr(r.value.field(), value)?;
            let mut status = match mw_equal(&r.value, &want)? {
                Decision::Equal => Status::Pass,
                Decision::NotEqual => Status::Fail,
                Decision::Undecided => Status::Undecided,
            };
            if !want.is_zero() && r.twist != *twist {
                status = Status::Fail;
            }
            Ok(Outcome { status, detail: format!("∂ {expr} = {r}") })
        }
        Body::Boundary => {
            let p = chart_preset(n)?;
            let rep = verify_boundary_relation(&p.left, &p.right, &p.witness, &p.divisors)?;
            let parts: Vec<String> = rep.checks.iter().map(|c| format!("{}: {}", c.divisor, c.decision)).collect();
            let status = match rep.decision {
                Decision::Equal => Status::Pass,
                Decision::NotEqual => Status::Fail,
                Decision::Undecided => Status::Undecided,
            };
            Ok(Outcome { status, detail: format!("over Q(x,t) and Q(y,s): {}", parts.join(", ")) })
        }
        Body::Table { preset: name, cells } => {
            let a = algebra(name, n, c)?;
            let mut bad = vec![];
            let mut total = 0;
            for i in 0..=max {
                for t in [0, 1] {
                    let label = a.presentation.twist_label(t);
                    let Some(r) = rule(cells, &a.presentation, i, t)? else {
                        bad.push(format!("({i},{label}): no fixture entry"));
                        continue;
                    };
                    total += 1;
                    let want = eval_group(&r.group, &env(c, Vars { i: i as i64, j: 0, n: n as i64 }))?;
                    let got = a.graded_piece(i, t);
                    if got.group != want {
                        bad.push(format!("({i},{label}): expected {want} ({}), got {}", r.group, got.group));
                    } else if let Some(b) = &r.basis {
                        if *b != got.basis {
                            bad.push(format!("({i},{label}): basis {:?}, expected {b:?}", got.basis));
                        }
                    }
                }
            }
            Ok(Outcome::from_mismatches(total, "cells", bad))
        }
        Body::Relations { preset: name, zero, nonzero } => {
            let a = algebra(name, n, c)?;
            let mut bad = vec![];
            for r in zero {
                if !a.is_zero(&a.parse(&with_n(r, n))?)? {
                    bad.push(format!("{} is not zero", with_n(r, n)));
                }
            }
            for r in nonzero {
                if a.is_zero(&a.parse(&with_n(r, n))?)? {
                    bad.push(format!("{} collapses to zero", with_n(r, n)));
                }
            }
            Ok(Outcome::from_mismatches(zero.len() + nonzero.len(), "relations", bad))
        }
        Body::Euler { preset: name, even, odd, range, values } => {
            let a = algebra(name, n, c)?;
            let mut bad = vec![];
            let mut cases: Vec<(i64, String)> = vec![];
            for k in 1..=*range {
                cases.push((-2 * k as i64, with_n(even, k)));
            }
            for k in 0..=*range {
                cases.push((-2 * k as i64 - 1, with_n(odd, k)));
            }
            cases.extend(values.iter().map(|v| (v.m, v.value.clone())));
            for (m, want) in &cases {
                let got = euler_class(&a, *m)?;
                if !a.equal(&got, &a.parse(want)?)? {
                    bad.push(format!("e({m}) = {}, expected {want}", a.display(&got)));
                }
            }
            let mut out = Outcome::from_mismatches(cases.len(), "Euler classes", bad);
            if values.iter().any(|v| v.m > 0) {
                out.detail += "; m > 0 uses the extrapolated rule e(m) = -e(-m)";
            }
            Ok(out)
        }
        Body::EulerProduct { preset: name, factors, value } => {
            let a = algebra(name, n, c)?;
            let mut prod = a.parse("1")?;
            for m in factors {
                prod = a.mul(&prod, &euler_class(&a, *m)?);
            }
            let ok = a.equal(&prod, &a.parse(value)?)?;
            Ok(Outcome {
                status: if ok { Status::Pass } else { Status::Fail },
                detail: format!("product = {}", a.display(&prod)),
            })
        }
        Body::Localization { source, target, multiplier, degrees, twists, extra } => {
            let s = algebra(source, n, c)?;
            let t = algebra(target, n, c)?;
            let e = s.parse(&with_n(multiplier, n))?;
            let mut cells = vec![];
            for i in 0..=max {
                if degree_matches(degrees, i)? {
                    for tw in twists {
                        cells.push((i, t.presentation.parse_twist(tw)?));
                    }
                }
            }
            for x in extra {
                cells.push((x.i, t.presentation.parse_twist(&x.twist)?));
            }
            let rep = localization_cokernel_check(&s, &t, &e, &cells)?;
            let bad = rep
                .cells
                .iter()
                .filter(|x| !x.matches)
                .map(|x| {
                    format!(
                        "({},{}): cokernel {}, target {}",
                        x.i,
                        x.twist,
                        AbGroup::from_orders(&x.cokernel.iter().map(|&d| d.into()).collect::<Vec<_>>(), x.cokernel_free),
                        AbGroup::from_orders(&x.target.iter().map(|&d| d.into()).collect::<Vec<_>>(), x.target_free)
                    )
                })
                .collect();
            let mut out = Outcome::from_mismatches(rep.cells.len(), "cells", bad);
            out.detail += &format!(" (e = {})", rep.multiplier);
            Ok(out)
        }
        Body::Alternative { preset: name, replace, with } => {
            let p = preset(&with_n(name, n))?;
            let old = p.parse(replace)?;
            let k = p
                .relations
                .iter()
                .position(|r| *r == old)
                .ok_or_else(|| CliError::Fixture(format!("{replace} is not a relation of {}", p.name)))?;
            let mut q = p.clone();
            q.relations[k] = q.parse(with)?;
            let (a, b) = (Algebra::new(&p, c)?, Algebra::new(&q, c)?);
            let mut bad = vec![];
            if table(&a, max) != table(&b, max) {
                bad.push("the graded pieces differ".to_string());
            }
            if !a.is_zero(&a.parse(with)?)? {
                bad.push(format!("{with} is not zero in the stated ring"));
            }
            if !b.is_zero(&b.parse(replace)?)? {
                bad.push(format!("{replace} is not zero in the alternative ring"));
            }
            let mut out = Outcome::from_mismatches(3, "comparisons", bad);
            if out.status == Status::Pass {
                out.detail = format!("{replace} and {with} generate the same ideal; the sign is not determined");
            }
            Ok(out)
        }
        Body::RankCollapse { preset: name, chow, cells } => {
            let a = chow_algebra(&rank_collapse(&preset(&with_n(name, n))?)?)?;
            let b = chow_algebra(&preset(chow)?)?;
            let z = Coefficients::Integers;
            let mut bad = vec![];
            for i in 0..=max {
                let Some(r) = rule(cells, &a.presentation, i, 0)? else {
                    bad.push(format!("degree {i}: no fixture entry"));
                    continue;
                };
                let want = eval_group(&r.group, &env(&z, Vars { i: i as i64, j: 0, n: n as i64 }))?;
                let (x, y) = (a.graded_piece(i, 0).group, b.graded_piece(i, 0).group);
                if x != want || y != want {
                    bad.push(format!("degree {i}: collapsed {x}, Chow preset {y}, expected {want}"));
                }
            }
            Ok(Outcome::from_mismatches(max as usize + 1, "degrees", bad))
        }
        Body::Itable { preset: name, weights, cells } => {
            let p = preset(name)?;
            let a = IAlgebra::new(&p, c)?;
            let mut bad = vec![];
            let mut total = 0;
            for i in 0..=max {
                for t in [0, 1] {
                    let Some(r) = rule(cells, &p, i, t)? else {
                        bad.push(format!("({i},{}): no fixture entry", p.twist_label(t)));
                        continue;
                    };
                    for j in weights[0]..=weights[1] {
                        total += 1;
                        let want = eval_group(&r.group, &env(c, Vars { i: i as i64, j: j as i64, n: 0 }))?;
                        let got = a.piece(i, j, t);
                        if got.group != want {
                            bad.push(format!(
                                "(i={i},j={j},{}): table {} = {want}, ring gives {}",
                                p.twist_label(t),
                                r.group,
                                got.group
                            ));
                        }
                    }
                }
            }
            Ok(Outcome::from_mismatches(total, "cells", bad))
        }
        Body::Pullback { source, target, rename } => {
            let (a, b) = (algebra(source, n, c)?, algebra(target, n, c)?);
            let map = |s: &str| {
                rename.iter().fold(s.to_string(), |acc, (from, to)| acc.replace(from.as_str(), to))
            };
            let mut bad = vec![];
            for i in 0..=max {
                for t in [0, 1] {
                    let (x, y) = (a.graded_piece(i, t), b.graded_piece(i, t));
                    let renamed: Vec<String> = x.basis.iter().map(|s| map(s)).collect();
                    if x.group != y.group || renamed != y.basis {
                        bad.push(format!("({i},{t}): {} {:?} vs {} {:?}", x.group, x.basis, y.group, y.basis));
                    }
                }
            }
            Ok(Outcome::from_mismatches(2 * (max as usize + 1), "cells", bad))
        }
    }
}

/// A valuation on `field`: the coordinate divisor of a variable, or the
/// divisor of an irreducible polynomial.
pub fn residue_context(
    field: &field_arith::FieldRef,
    divisor: &str,
    label: Option<&str>,
    uniformizer: Option<&str>,
) -> Result<ValuationContext> {
    let mut d = if field.var_index(divisor.trim()).is_some() {
        PrimeDivisor::coordinate(field, divisor.trim())?
    } else {
        PrimeDivisor::symbolic(FieldElement::parse(field, divisor)?)?
    };
    if let Some(l) = label {
        d = d.with_label(l);
    }
    let mut ctx = ValuationContext::new(d);
    if let Some(u) = uniformizer {
        ctx = ctx.with_uniformizer(FieldElement::parse(field, u)?)?;
    }
    Ok(ctx)
}

/// Fixture ids grouped by suite.
pub fn fixture_ids(fixtures: &Fixtures) -> BTreeMap<String, Vec<String>> {
    let mut out: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for f in &fixtures.check {
        out.entry(f.suite.clone()).or_default().push(f.id.clone());
    }
    out
}
