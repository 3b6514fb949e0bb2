//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one line; exits nonzero if any fails.

use std::time::{Duration, Instant};

use chowwitt::fixtures::{builtin, Fixtures};
use chowwitt::suites::run_with;
use chowwitt::{Check, Status, VerifyOptions};
use field_arith::{Field, FieldElement, FieldRef};
use mw_symbols::{eval_gw, mw_equal, mw_normalize, project, Decision, MWExpr, Word};
use qf_gw::{gw_equal, witt_equal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIELDS: [&str; 4] = ["C", "R", "F5", "F7"];

type Verdict = Result<String, String>;

fn checks(field: &str, prefixes: &[&str]) -> Vec<Check> {
    let opts = VerifyOptions { field: field.into(), ..VerifyOptions::default() };
    let mut fixtures: Fixtures = builtin();
    fixtures.check.retain(|f| prefixes.iter().any(|p| f.id.starts_with(p)));
    run_with(&fixtures, "all", &opts).unwrap().checks
}

fn all_pass(fields: &[&str], prefixes: &[&str], budget: Option<Duration>) -> Verdict {
    let start = Instant::now();
    let mut count = 0;
    let mut bad = Vec::new();
    for field in fields {
        let found = checks(field, prefixes);
        if found.is_empty() {
            bad.push(format!("{field}: no checks"));
        }
        for c in found {
            count += 1;
            if c.status != Status::Pass {
                bad.push(format!("{field} {}: {}", c.id, c.detail));
            }
        }
    }
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        if elapsed > b {
            bad.push(format!("took {elapsed:?}, budget {b:?}"));
        }
    }
    if bad.is_empty() {
        Ok(format!("{count} checks in {elapsed:.2?}"))
    } else {
        Err(bad.join(" | "))
    }
}

fn pool(f: &FieldRef) -> Vec<FieldElement> {
    let src: &[&str] = if f.characteristic() == 0 {
        &["-1", "2", "-2", "3", "-3", "5", "6", "-6", "7", "1/2", "2/3", "4", "9", "18", "-5", "10"]
    } else {
        &["1", "2", "3", "4"]
    };
    src.iter().map(|s| FieldElement::parse(f, s).unwrap()).collect()
}

fn random_expr(rng: &mut ChaCha8Rng, f: &FieldRef, degree: i64) -> MWExpr {
    let pool = pool(f);
    let mut x = MWExpr::zero(f);
    for _ in 0..rng.gen_range(1..=3) {
        let eta: u32 = rng.gen_range(0..=2);
        let len = degree + eta as i64;
        if !(0..=3).contains(&len) {
            continue;
        }
        let symbols = (0..len).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
        x = x.add(&MWExpr::word(f, Word::new(eta, symbols).unwrap()).scale(rng.gen_range(-3i64..=3)));
    }
    x
}

fn square_holds(x: &MWExpr) -> std::result::Result<(), String> {
    let p = project(x).map_err(|e| e.to_string())?;
    if p.commutes != Some(true) {
        return Err(format!("square fails on {x}"));
    }
    let nx = mw_normalize(x);
    let q = project(&nx).map_err(|e| e.to_string())?;
    if !witt_equal(&p.witt, &q.witt).map_err(|e| e.to_string())? {
        return Err(format!("Witt image moved: {x} -> {nx}"));
    }
    let (a, b) = (p.milnor_mod2.unwrap(), q.milnor_mod2.unwrap());
    if !(a == b || (a.is_zero() && b.is_zero())) {
        return Err(format!("mod-2 image moved: {x} -> {nx}"));
    }
    if mw_equal(x, &nx).map_err(|e| e.to_string())? != Decision::Equal {
        return Err(format!("{x} and {nx} not equal"));
    }
    Ok(())
}

fn criterion_7() -> Verdict {
    let mut n = 0;
    for field in ["F5", "Q"] {
        let f = Field::parse(field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for i in 0..500 {
            square_holds(&random_expr(&mut rng, &f, (i % 5) as i64 - 2))?;
            let (x, y) = (random_expr(&mut rng, &f, 0), random_expr(&mut rng, &f, 0));
            let (ex, ey) = (eval_gw(&x).unwrap(), eval_gw(&y).unwrap());
            let sum = gw_equal(&eval_gw(&x.add(&y)).unwrap(), &ex.add(&ey)).unwrap();
            let prod = gw_equal(&eval_gw(&x.mul(&y)).unwrap(), &ex.mul(&ey)).unwrap();
            if !(sum && prod) {
                return Err(format!("{field}: eval_gw not multiplicative on {x}, {y}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} random expressions"))
}

fn main() {
    let ten = Some(Duration::from_secs(10));
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict>)> = vec![
        ("B mu_2n tables, n in {1,2,3,6}", Box::new(move || all_pass(&FIELDS, &["table-bmu"], ten))),
        ("Mbar and M tables", Box::new(move || all_pass(&FIELDS, &["table-mbar", "table-mcal"], ten))),
        ("relations hold and presentations are complete", Box::new(|| {
            all_pass(&FIELDS, &["relations-", "relation-sign", "table-bgm", "pullback-"], None)
        })),
        ("residues and boundary", Box::new(|| {
            all_pass(&["C"], &["residue-", "boundary-", "h-as-symbol"], Some(Duration::from_secs(1)))
        })),
        ("Euler classes", Box::new(|| all_pass(&FIELDS, &["euler-"], None))),
        ("localization sequences", Box::new(|| all_pass(&FIELDS, &["localization-"], None))),
        ("Cartesian square on random expressions", Box::new(criterion_7)),
        ("GW oracle and coefficient groups", Box::new(|| {
            all_pass(&["F5"], &["coefficients-", "gw-equal-vs-enumeration"], Some(Duration::from_secs(60)))
        })),
        ("rank collapse to Chow rings", Box::new(|| all_pass(&FIELDS, &["chow-"], None))),
        ("I-cohomology table", Box::new(|| all_pass(&["F5", "R"], &["i-cohomology-"], None))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
