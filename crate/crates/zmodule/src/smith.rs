use crate::{Matrix, Scalar};

/// Smith normal form `U * A * V = D` of an `m x n` matrix.
///
/// Only the column transform is retained: `right` is `V`, `right_inv` its inverse.
/// The diagonal has length `min(m, n)`, is non-negative, and each nonzero entry
/// divides the next; zeros come last.
#[derive(Clone, Debug)]
pub struct Smith<T> {
    pub diagonal: Vec<T>,
    pub right: Matrix<T>,
    pub right_inv: Matrix<T>,
    pub rank: usize,
}

impl<T: Scalar> Smith<T> {
    /// The order of each new generator of `Z^n / rowspace(A)`: `d_i` for
    /// pivot columns and `0` (free) for the remaining ones.
    pub fn column_orders(&self) -> Vec<T> {
        let n = self.right.ncols();
        (0..n)
            .map(|j| if j < self.diagonal.len() { self.diagonal[j].clone() } else { T::zero() })
            .collect()
    }
}

fn min_abs_position<T: Scalar>(
    a: &Matrix<T>,
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, j) in cells {
        let v = a.get(i, j);
        if v.is_zero() {
            continue;
        }
        match best {
            None => best = Some((i, j)),
            Some((bi, bj)) => {
                if v.abs() < a.get(bi, bj).abs() {
                    best = Some((i, j));
                }
            }
        }
    }
    best
}

pub fn smith_normal_form<T: Scalar>(input: &Matrix<T>) -> Smith<T> {
    let m = input.nrows();
    let n = input.ncols();
    let mut a = input.clone();
    let mut v = Matrix::identity(n);
    let mut vinv = Matrix::identity(n);
    let mut t = 0;

    let swap_cols = |a: &mut Matrix<T>, v: &mut Matrix<T>, vinv: &mut Matrix<T>, x: usize, y: usize| {
        if x != y {
            a.swap_cols(x, y);
            v.swap_cols(x, y);
            vinv.swap_rows(x, y);
        }
    };

    while t < m.min(n) {
        let cells = (t..m).flat_map(|i| (t..n).map(move |j| (i, j)));
        let Some((pi, pj)) = min_abs_position(&a, cells) else { break };
        a.swap_rows(t, pi);
        swap_cols(&mut a, &mut v, &mut vinv, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).clone() / a.get(t, t).clone();
                a.add_row(i, t, &-q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).clone() / a.get(t, t).clone();
                a.add_col(j, t, &-q.clone());
                v.add_col(j, t, &-q.clone());
                vinv.add_row(t, j, &q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let cells = (t..n).map(|j| (t, j)).chain((t + 1..m).map(|i| (i, t)));
                let (pi, pj) = min_abs_position(&a, cells).expect("pivot row or column is nonzero");
                a.swap_rows(t, pi);
                swap_cols(&mut a, &mut v, &mut vinv, t, pj);
                continue;
            }
            let pivot = a.get(t, t).clone();
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_multiple_of(&pivot));
            match bad {
                Some((i, _)) => a.add_row(t, i, &T::one()),
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
        }
        t += 1;
    }

    let diagonal: Vec<T> = (0..m.min(n)).map(|i| a.get(i, i).clone()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    Smith { diagonal, right: v, right_inv: vinv, rank }
}

/// A basis of `{x : A x = 0}` over the integers, as vectors of length `ncols(A)`.
pub fn right_kernel<T: Scalar>(a: &Matrix<T>) -> Vec<Vec<T>> {
    let s = smith_normal_form(a);
    (s.rank..a.ncols()).map(|j| s.right.column(j)).collect()
}

/// A basis of `{y : y A = 0}` over the integers, as vectors of length `nrows(A)`.
pub fn left_kernel<T: Scalar>(a: &Matrix<T>) -> Vec<Vec<T>> {
    right_kernel(&a.transpose())
}
