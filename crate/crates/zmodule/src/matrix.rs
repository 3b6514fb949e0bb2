use crate::Scalar;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<T>>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![T::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = T::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
        }
        Matrix { rows: rows.len(), cols, data: rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = self.data[i][k].clone() * other.data[k][j].clone();
                    out.data[i][j] = out.data[i][j].clone() + p;
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.rows, "dimension mismatch");
        let mut out = vec![T::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] = out[j].clone() + xi.clone() * self.data[i][j].clone();
            }
        }
        out
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    /// row[dst] += q * row[src]
    pub(crate) fn add_row(&mut self, dst: usize, src: usize, q: &T) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.data[src][j].clone() * q.clone();
            self.data[dst][j] = self.data[dst][j].clone() + v;
        }
    }

    /// col[dst] += q * col[src]
    pub(crate) fn add_col(&mut self, dst: usize, src: usize, q: &T) {
        if q.is_zero() {
            return;
        }
        for r in &mut self.data {
            let v = r[src].clone() * q.clone();
            r[dst] = r[dst].clone() + v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for v in &mut self.data[i] {
            *v = -v.clone();
        }
    }
}
