//! Regeneration of the DERIVED fixture entries from first principles.

use field_arith::{Field, FieldElement};
use qf_gw::{brute_force_isometry, gw_equal, GWElement};
use zmodule::{AbGroup, Int, Presentation};

use crate::error::{CliError, Result};

fn nonsquare(p: u64, a: u64) -> bool {
    (1..p).all(|x| x * x % p != a % p)
}

/// GW(k) and W(k) without the coefficient theory: rank over ℂ, rank and
/// signature over ℝ, and isometry search between binary forms over 𝔽_p,
/// p ∈ {3, 5, 7}.
pub fn derived_coefficients(field: &str) -> Result<(AbGroup, AbGroup)> {
    match field {
        "C" => Ok((AbGroup::integers(), AbGroup::cyclic(2))),
        "R" => Ok((AbGroup::from_orders(&[], 2), AbGroup::integers())),
        "F3" | "F5" | "F7" => {
            let p: u64 = field[1..].parse().unwrap();
            let reps = [1, (2..p).find(|&a| nonsquare(p, a)).unwrap()];
            let pairs = [(0, 0), (0, 1), (1, 1)];
            let mut gw = Presentation::new(2);
            for (k, &(a, b)) in pairs.iter().enumerate() {
                for &(c, d) in &pairs[k + 1..] {
                    if brute_force_isometry(p, &[reps[a], reps[b]], &[reps[c], reps[d]])? {
                        let mut r = vec![Int::from(0); 2];
                        r[a] += 1;
                        r[b] += 1;
                        r[c] -= 1;
                        r[d] -= 1;
                        gw.push(r);
                    }
                }
            }
            let mut h = vec![Int::from(1), Int::from(0)];
            h[usize::from(nonsquare(p, p - 1))] += 1;
            Ok((gw.decompose().group, gw.quotient(&[h]).decompose().group))
        }
        _ => Err(CliError::Usage(format!("no coefficient oracle for {field}"))),
    }
}

/// All diagonal forms over 𝔽_p of rank at most `max_rank`.
pub fn diagonal_forms(p: u64, max_rank: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..max_rank {
        layer = layer.iter().flat_map(|f| (1..p).map(move |a| [f.clone(), vec![a]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Compares gw_equal with exhaustive isometry search on every pair of forms;
/// returns the number of pairs and the disagreements.
pub fn compare_with_enumeration(p: u64, max_rank: usize) -> Result<(usize, Vec<String>)> {
    let k = Field::parse(&format!("F{p}"))?;
    let forms = diagonal_forms(p, max_rank);
    let elems: Vec<GWElement> = forms
        .iter()
        .map(|f| {
            let es: Vec<FieldElement> = f.iter().map(|&a| FieldElement::int(&k, a as i64)).collect();
            GWElement::diagonal(&k, &es)
        })
        .collect::<std::result::Result<_, _>>()?;
    let mut bad = vec![];
    for (f, x) in forms.iter().zip(&elems) {
        for (g, y) in forms.iter().zip(&elems) {
            if gw_equal(x, y)? != brute_force_isometry(p, f, g)? {
                bad.push(format!("{f:?} vs {g:?}"));
            }
        }
    }
    Ok((forms.len() * forms.len(), bad))
}
