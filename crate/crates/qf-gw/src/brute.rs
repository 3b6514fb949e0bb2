use crate::error::{GwError, Result};

/// Decides `Tᵗ·diag(f)·T = diag(g)` for some T over 𝔽_p by exhaustive search
/// over the columns of T. A column must have norm g_i under f and be
/// orthogonal to the earlier ones; such columns are independent because the
/// g_i are nonzero.
pub fn brute_force_isometry(p: u64, f: &[u64], g: &[u64]) -> Result<bool> {
    if ![3, 5, 7].contains(&p) {
        return Err(GwError::Bounds(format!("p = {p} not in {{3,5,7}}")));
    }
    if f.len() > 3 || g.len() > 3 {
        return Err(GwError::Bounds("rank above 3".into()));
    }
    if f.iter().chain(g).any(|&a| a % p == 0) {
        return Err(GwError::ZeroEntry);
    }
    if f.len() != g.len() {
        return Ok(false);
    }
    let r = f.len();
    let vectors: Vec<Vec<u64>> = (0..p.pow(r as u32))
        .map(|mut k| {
            (0..r)
                .map(|_| {
                    let d = k % p;
                    k /= p;
                    d
                })
                .collect()
        })
        .collect();
    let dot = |u: &[u64], v: &[u64]| -> u64 { (0..r).map(|i| f[i] * u[i] * v[i]).sum::<u64>() % p };
    // candidates[i]: vectors whose norm is g_i
    let candidates: Vec<Vec<&[u64]>> = g
        .iter()
        .map(|&gi| vectors.iter().map(Vec::as_slice).filter(|v| dot(v, v) == gi % p).collect())
        .collect();
    fn search<'a>(i: usize, cols: &mut Vec<&'a [u64]>, candidates: &[Vec<&'a [u64]>], dot: &dyn Fn(&[u64], &[u64]) -> u64) -> bool {
        if i == candidates.len() {
            return true;
        }
        for &v in &candidates[i] {
            if cols.iter().all(|c| dot(v, c) == 0) {
                cols.push(v);
                if search(i + 1, cols, candidates, dot) {
                    return true;
                }
                cols.pop();
            }
        }
        false
    }
    Ok(search(0, &mut Vec::new(), &candidates, &dot))
}
