use num_bigint::BigInt;
use proptest::prelude::*;
use zmodule::{left_kernel, smith_normal_form, AbGroup, Int, Matrix, Presentation};

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn small_known_forms() {
    let a = Matrix::from_rows(2, vec![vec![2i64, 4], vec![6, 8]]);
    let s = smith_normal_form(&a);
    assert_eq!(s.diagonal, vec![2, 4]);

    let g = AbGroup::from_orders(&ints(&[4, 6]), 1);
    assert_eq!(g.torsion, ints(&[2, 12]));
    assert_eq!(g.free, 1);
    assert_eq!(g.to_string(), "Z/2 + Z/12 + Z");
}

#[test]
fn presentation_of_z_mod_four_n() {
    // generators T, TU with TU = 2nT and 2TU = 0, n = 2
    let mut p = Presentation::new(2);
    p.push(ints(&[-4, 1]));
    p.push(ints(&[0, 2]));
    let d = p.decompose();
    assert_eq!(d.group, AbGroup::cyclic(8));
    assert!(d.is_zero(&ints(&[8, 0])));
    assert!(!d.is_zero(&ints(&[4, 0])));
    assert!(d.is_zero(&ints(&[-4, 1])));
}

#[test]
fn subgroup_of_quotient() {
    // inside Z/4, the subgroup generated by 2 is Z/2
    let mut p = Presentation::new(1);
    p.push(ints(&[4]));
    assert_eq!(p.subgroup(&[ints(&[2])]), AbGroup::cyclic(2));
    // inside Z^2/<(2,2)>, the element (1,1) has order 2
    let mut q = Presentation::new(2);
    q.push(ints(&[2, 2]));
    assert_eq!(q.subgroup(&[ints(&[1, 1])]), AbGroup::cyclic(2));
    assert_eq!(q.subgroup(&[ints(&[1, 0])]), AbGroup::integers());
}

proptest! {
    #[test]
    fn smith_invariants_hold(entries in proptest::collection::vec(-9i64..10, 12), rows in 1usize..5) {
        let cols = 12 / rows.max(1);
        let rows_v: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * cols..(i + 1) * cols].to_vec()).collect();
        let a = Matrix::from_rows(cols, rows_v.clone());
        let s = smith_normal_form(&a);
        // V * V^-1 = I
        prop_assert_eq!(s.right.mul(&s.right_inv), Matrix::identity(cols));
        // divisibility chain with zeros last
        for w in s.diagonal.windows(2) {
            if w[1] != 0 {
                prop_assert!(w[0] != 0 && w[1] % w[0] == 0);
            }
        }
        // A V has column j divisible by d_j, zero beyond the rank
        let av = a.mul(&s.right);
        for j in 0..cols {
            for i in 0..rows {
                let v = *av.get(i, j);
                if j < s.rank {
                    prop_assert_eq!(v % s.diagonal[j], 0);
                } else {
                    prop_assert_eq!(v, 0);
                }
            }
        }
    }

    #[test]
    fn square_determinant_is_diagonal_product(entries in proptest::collection::vec(-6i64..7, 9)) {
        let m: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let s = smith_normal_form(&Matrix::from_rows(3, m.clone()));
        let prod: i64 = s.diagonal.iter().product();
        prop_assert_eq!(prod, det(&m).abs());
    }

    #[test]
    fn left_kernel_annihilates(entries in proptest::collection::vec(-5i64..6, 12)) {
        let m: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let a = Matrix::from_rows(3, m);
        for y in left_kernel(&a) {
            prop_assert!(a.apply_row(&y).iter().all(|&v| v == 0));
        }
    }
}
