//! Graded pieces of the presets against the additive tables, with GW(k) and
//! W(k) supplied by an independent oracle.

use graded_algebra::*;
use qf_gw::brute_force_isometry;
use zmodule::{AbGroup, Int, Presentation};

/// GW(k) and W(k) from a classification of forms that does not go through
/// the coefficient theory: rank over ℂ, rank and signature over ℝ, and
/// exhaustive isometry search between binary forms over 𝔽_p.
fn oracle(field: &str) -> (AbGroup, AbGroup) {
    match field {
        "C" => (AbGroup::integers(), AbGroup::cyclic(2)),
        "R" => (AbGroup::from_orders(&[], 2), AbGroup::integers()),
        _ => {
            let p: u64 = field[1..].parse().unwrap();
            let nonsquare = (2..p).find(|a| (1..p).all(|x| x * x % p != *a)).unwrap();
            let reps = [1, nonsquare];
            let class = |a: u64| usize::from((1..p).all(|x| x * x % p != a % p));
            let mut gw = Presentation::new(2);
            let pairs: Vec<(usize, usize)> = vec![(0, 0), (0, 1), (1, 1)];
            for (k, &(a, b)) in pairs.iter().enumerate() {
                for &(c, d) in &pairs[k + 1..] {
                    if brute_force_isometry(p, &[reps[a], reps[b]], &[reps[c], reps[d]]).unwrap() {
                        let mut r = vec![Int::from(0); 2];
                        r[a] += 1;
                        r[b] += 1;
                        r[c] -= 1;
                        r[d] -= 1;
                        gw.push(r);
                    }
                }
            }
            let mut h = vec![Int::from(0); 2];
            h[0] += 1;
            h[class(p - 1)] += 1;
            (gw.decompose().group, gw.quotient(&[h]).decompose().group)
        }
    }
}

const FIELDS: [&str; 4] = ["C", "R", "F5", "F7"];

fn z() -> AbGroup {
    AbGroup::integers()
}

fn check(name: &str, expected: impl Fn(&AbGroup, &AbGroup, u32, u8) -> AbGroup) {
    for f in FIELDS {
        let (gw, w) = oracle(f);
        let a = Algebra::new(&preset(name).unwrap(), &Coefficients::parse(f).unwrap()).unwrap();
        for i in 0..=6 {
            for t in [0, 1] {
                assert_eq!(a.graded_piece(i, t).group, expected(&gw, &w, i, t), "{name} over {f} at ({i},{t})");
            }
        }
    }
}

#[test]
fn oracle_coefficients_match_the_theory() {
    for f in FIELDS {
        let c = Coefficients::parse(f).unwrap();
        assert_eq!((c.gw_group(), c.w_group()), oracle(f), "{f}");
    }
    assert_eq!(oracle("F5").1, AbGroup::from_orders(&[Int::from(2), Int::from(2)], 0));
    assert_eq!(oracle("F7").1, AbGroup::cyclic(4));
}

#[test]
fn bgm() {
    check("BGm", |gw, _, i, t| match (i, t) {
        (0, 0) => gw.clone(),
        _ => z(),
    });
}

#[test]
fn bmu() {
    for n in [1u32, 2, 3, 6] {
        check(&format!("Bmu({})", 2 * n), |gw, w, i, t| match (i, t, i % 2) {
            (0, 0, _) => gw.direct_sum(w),
            (0, 1, _) => z(),
            (_, 0, 1) | (_, 1, 0) => AbGroup::cyclic(n),
            _ => AbGroup::cyclic(4 * n),
        });
    }
}

#[test]
fn mbar() {
    check("MbarEll", |gw, w, i, t| match (i, t) {
        (0, 0) => gw.clone(),
        (0, 1) | (1, 1) => z(),
        (1, 0) => z().direct_sum(w),
        _ => AbGroup::cyclic(24),
    });
}

#[test]
fn mell() {
    check("MEll", |gw, w, i, t| match (i, t, i % 2) {
        (0, 0, _) => gw.direct_sum(w),
        (0, 1, _) => z(),
        (_, 0, 1) | (_, 1, 0) => AbGroup::cyclic(6),
        _ => AbGroup::cyclic(24),
    });
}

#[test]
fn pullback_to_bmu12_is_an_isomorphism() {
    let rename = |s: &str| s.replace('D', "U");
    for f in FIELDS {
        let c = Coefficients::parse(f).unwrap();
        let m = Algebra::new(&preset("MEll").unwrap(), &c).unwrap();
        let b = Algebra::new(&preset("Bmu(12)").unwrap(), &c).unwrap();
        for i in 0..=6 {
            for t in [0, 1] {
                let (x, y) = (m.graded_piece(i, t), b.graded_piece(i, t));
                assert_eq!(x.group, y.group, "{f} ({i},{t})");
                assert_eq!(x.basis.iter().map(|s| rename(s)).collect::<Vec<_>>(), y.basis);
            }
        }
    }
}

#[test]
fn i_cohomology_of_bgm() {
    let p = preset("BGm_I").unwrap();
    for f in ["C", "R", "F5"] {
        let c = Coefficients::parse(f).unwrap();
        let th = c.theory().unwrap();
        let a = IAlgebra::new(&p, &c).unwrap();
        let kbar = |n: i32| if n < 0 { AbGroup::zero() } else { th.kbar(n as u32) };
        for i in 0..=6u32 {
            for j in -2..=8 {
                for t in [0, 1] {
                    let d = j - i as i32;
                    let expected = match (i, t, i % 2) {
                        (0, 0, _) if j <= 0 => th.w_group(),
                        (0, 0, _) => th.i_power_group(j as u32),
                        (_, 0, 0) | (_, 1, 1) => kbar(d),
                        _ => AbGroup::zero(),
                    };
                    assert_eq!(a.piece(i, j, t).group, expected, "{f} ({i},{j},{t})");
                }
            }
        }
    }
}
