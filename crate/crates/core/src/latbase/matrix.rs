use std::fmt;
use std::ops::Mul;

use crate::scalar::Scalar;

/// A dense matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<T>>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![vec![T::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = T::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(cols: usize, data: Vec<Vec<T>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows: data.len(), cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| T::from_int(x)).collect()).collect())
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

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.data
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_rows(self.rows, (0..self.cols).map(|j| self.col(j)).collect())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        self.data.iter().map(|r| dot(r, v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(|x| x.is_zero())
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        self.data.swap(i, j);
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        for r in &mut self.data {
            r.swap(i, j);
        }
    }

    /// `row_i += k · row_j`
    pub fn add_row(&mut self, i: usize, j: usize, k: &T) {
        for c in 0..self.cols {
            let v = self.data[j][c].clone() * k.clone();
            self.data[i][c] = self.data[i][c].clone() + v;
        }
    }

    /// `col_i += k · col_j`
    pub fn add_col(&mut self, i: usize, j: usize, k: &T) {
        for r in &mut self.data {
            let v = r[j].clone() * k.clone();
            r[i] = r[i].clone() + v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -x.clone();
        }
    }

    /// Determinant by fraction-free elimination (Bareiss);
    /// every division is exact.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.data.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                    m[i][j] = v / prev.clone();
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    /// Submatrix on the given rows, all columns.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_rows(self.cols, rows.iter().map(|&i| self.data[i].clone()).collect())
    }
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let data = self
            .data
            .iter()
            .map(|r| {
                (0..rhs.cols)
                    .map(|j| (0..self.cols).fold(T::zero(), |acc, k| acc + r[k].clone() * rhs.data[k][j].clone()))
                    .collect()
            })
            .collect();
        Matrix { rows: self.rows, cols: rhs.cols, data }
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Every `k`-element subset of `0..n`, lexicographically.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
