//! Smith and Hermite normal forms over a Euclidean ring of integers.

use crate::scalar::IntScalar;

use super::matrix::Matrix;

/// `D = U·M·V` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | ⋯`,
/// all `d_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith<I: IntScalar> {
    pub u: Matrix<I>,
    pub d: Matrix<I>,
    pub v: Matrix<I>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl<I: IntScalar> Smith<I> {
    pub fn divisors(&self) -> Vec<I> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Smith normal form by repeatedly pivoting on the entry of smallest
/// absolute value in the trailing block.
pub fn snf<I: IntScalar>(m: &Matrix<I>) -> Smith<I> {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let p = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a.get(i, t).clone() / p.clone();
                if !q.is_zero() {
                    a.add_row(i, t, &-q.clone());
                    u.add_row(i, t, &-q);
                }
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = a.get(t, j).clone() / p.clone();
                if !q.is_zero() {
                    a.add_col(j, t, &-q.clone());
                    v.add_col(j, t, &-q);
                }
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                // a remainder is now smaller than the pivot; pivot on it
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match bad_row {
                Some(i) => {
                    a.add_row(t, i, &I::one());
                    u.add_row(t, i, &I::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Smith { u, d: a, v, rank: t }
}

fn smallest_entry<I: IntScalar>(a: &Matrix<I>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.nrows() {
        for j in t..a.ncols() {
            let x = a.get(i, j);
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross<I: IntScalar>(a: &Matrix<I>, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let cells = (t + 1..a.nrows()).map(|i| (i, t)).chain((t + 1..a.ncols()).map(|j| (t, j)));
    for (i, j) in cells {
        let x = a.get(i, j);
        if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
            best = (i, j);
        }
    }
    best
}

/// Row-style Hermite normal form of the lattice spanned by the rows: an
/// echelon basis with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. Zero rows are dropped, so the result is the unique
/// canonical basis of the row lattice.
pub fn hnf_rows<I: IntScalar>(rows: &[Vec<I>], cols: usize) -> Vec<Vec<I>> {
    let mut a: Vec<Vec<I>> = rows.to_vec();
    let mut r = 0;
    for c in 0..cols {
        while let Some(p) =
            (r..a.len()).filter(|&i| !a[i][c].is_zero()).min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()))
        {
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                let q = a[i][c].clone() / a[r][c].clone();
                if !q.is_zero() {
                    sub_row(&mut a, i, r, &q);
                }
                done &= a[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                for x in &mut a[r] {
                    *x = -x.clone();
                }
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                if !q.is_zero() {
                    sub_row(&mut a, i, r, &q);
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    a
}

fn sub_row<I: IntScalar>(a: &mut [Vec<I>], i: usize, r: usize, q: &I) {
    for c in 0..a[i].len() {
        let v = a[r][c].clone() * q.clone();
        a[i][c] = a[i][c].clone() - v;
    }
}

/// Basis of the integer kernel `{x ∈ ℤⁿ : M·x = 0}` in Hermite form. The
/// kernel of an integer matrix is always a saturated lattice.
pub fn integer_kernel<I: IntScalar>(m: &Matrix<I>) -> Vec<Vec<I>> {
    let s = snf(m);
    let basis: Vec<Vec<I>> = (s.rank..m.ncols()).map(|j| s.v.col(j)).collect();
    hnf_rows(&basis, m.ncols())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &Matrix<i64>) -> Smith<i64> {
        let s = snf(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert_eq!(s.u.det().abs(), 1);
        assert_eq!(s.v.det().abs(), 1);
        let ds = s.divisors();
        for w in ds.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        assert!(ds.iter().all(|&d| d > 0));
        s
    }

    #[test]
    fn elementary_divisors() {
        assert_eq!(check(&Matrix::identity(2)).divisors(), vec![1, 1]);
        assert_eq!(check(&Matrix::from_i64(&[&[2, -1], &[1, -2]])).divisors(), vec![1, 3]);
        assert_eq!(check(&Matrix::from_i64(&[&[3, -1], &[1, -2]])).divisors(), vec![1, 5]);
        assert_eq!(check(&Matrix::from_i64(&[&[2, 0], &[0, 3]])).divisors(), vec![1, 6]);
        assert_eq!(check(&Matrix::from_i64(&[&[4, 6, 8], &[6, 9, 12]])).divisors(), vec![1]);
        assert_eq!(check(&Matrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).divisors(), vec![2, 6, 12]);
    }

    #[test]
    fn hermite_form_is_canonical() {
        let a = hnf_rows(&[vec![2i64, 1], vec![1, 3]], 2);
        let b = hnf_rows(&[vec![3i64, 4], vec![1, 3], vec![4, 7]], 2);
        assert_eq!(a, b);
        assert_eq!(a, vec![vec![1, 3], vec![0, 5]]);
    }

    #[test]
    fn kernel_is_saturated() {
        let k = integer_kernel(&Matrix::<i64>::from_i64(&[&[2, 4, 6]]));
        assert_eq!(k.len(), 2);
        assert_eq!(hnf_rows(&k, 3), k);
        assert_eq!(k, vec![vec![1, 1, -1], vec![0, 3, -2]]);
    }
}
