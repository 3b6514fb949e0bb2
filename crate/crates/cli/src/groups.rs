//! The small language used by fixtures to describe expected groups, e.g.
//! `GW + W`, `Z/4n`, `I(j-2)`, `kM(j-i-1)`, and degree selectors such as
//! `odd>=3` or `1..6`.

use qf_gw::CoefficientTheory;
use zmodule::{AbGroup, Int};

use crate::error::{CliError, Result};

/// Values of the variables a group expression may mention.
#[derive(Clone, Copy, Debug, Default)]
pub struct Vars {
    pub i: i64,
    pub j: i64,
    pub n: i64,
}

/// Evaluates an integer linear expression in i, j, n such as `4n` or `j-i-1`.
pub fn linear(s: &str, v: Vars) -> Result<i64> {
    let bad = || CliError::Fixture(format!("bad integer expression {s:?}"));
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad());
    }
    let mut total = 0;
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body[1.min(body.len())..].find(['+', '-']).map(|k| k + 1).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
        let coef: i64 = if digits == 0 { 1 } else { term[..digits].parse().map_err(|_| bad())? };
        let var = match &term[digits..] {
            "" => 1,
            "i" => v.i,
            "j" => v.j,
            "n" => v.n,
            _ => return Err(bad()),
        };
        if digits == 0 && term.is_empty() {
            return Err(bad());
        }
        total += sign * coef * var;
    }
    Ok(total)
}

/// What the atoms of a group expression stand for.
pub struct GroupEnv<'a> {
    pub gw: AbGroup,
    pub w: AbGroup,
    pub theory: Option<&'a CoefficientTheory>,
    pub vars: Vars,
}

/// Parses `0`, `Z`, `Z^k`, `Z/m`, `GW`, `W`, `I(m)` (W for m ≤ 0) and
/// `kM(m)` (0 for m < 0), joined by `+`.
pub fn eval_group(s: &str, env: &GroupEnv) -> Result<AbGroup> {
    let mut g = AbGroup::zero();
    for term in s.split('+').map(str::trim) {
        let arg = |prefix: &str| -> Result<Option<i64>> {
            match term.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
                Some(x) => linear(x, env.vars).map(Some),
                None => Ok(None),
            }
        };
        let theory = || env.theory.ok_or_else(|| CliError::Fixture(format!("{term} needs a field")));
        let h = if term == "0" {
            AbGroup::zero()
        } else if term == "GW" {
            env.gw.clone()
        } else if term == "W" {
            env.w.clone()
        } else if term == "Z" {
            AbGroup::integers()
        } else if let Some(r) = term.strip_prefix("Z^") {
            AbGroup::from_orders(&[], r.parse().map_err(|_| CliError::Fixture(format!("bad group {term:?}")))?)
        } else if let Some(m) = term.strip_prefix("Z/") {
            AbGroup::cyclic(Int::from(linear(m, env.vars)?))
        } else if let Some(m) = arg("I(")? {
            if m <= 0 {
                env.w.clone()
            } else {
                theory()?.i_power_group(m as u32)
            }
        } else if let Some(m) = arg("kM(")? {
            if m < 0 {
                AbGroup::zero()
            } else {
                theory()?.kbar(m as u32)
            }
        } else {
            return Err(CliError::Fixture(format!("bad group {term:?}")));
        };
        g = g.direct_sum(&h);
    }
    Ok(g)
}

/// A set of codimensions: `3`, `odd`, `even`, `>=2`, `odd>=3`, `even>=2`, `1..6`.
pub fn degree_matches(sel: &str, i: u32) -> Result<bool> {
    let bad = || CliError::Fixture(format!("bad degree selector {sel:?}"));
    if let Some((a, b)) = sel.split_once("..") {
        let (a, b): (u32, u32) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
        return Ok((a..=b).contains(&i));
    }
    if let Ok(k) = sel.parse::<u32>() {
        return Ok(i == k);
    }
    let (parity, min) = match sel.split_once(">=") {
        Some((p, m)) => (p, m.parse::<u32>().map_err(|_| bad())?),
        None => (sel, 0),
    };
    let ok = match parity {
        "" => true,
        "odd" => i % 2 == 1,
        "even" => i % 2 == 0,
        _ => return Err(bad()),
    };
    Ok(ok && i >= min)
}

/// Substitutes `{n}`, `{2n}` and `{2n+1}`.
pub fn with_n(s: &str, n: u32) -> String {
    s.replace("{2n+1}", &(2 * n + 1).to_string()).replace("{2n}", &(2 * n).to_string()).replace("{n}", &n.to_string())
}
