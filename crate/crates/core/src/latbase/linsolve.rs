//! Exact rational Gaussian elimination.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::scalar::IntScalar;

/// Reduced row-echelon form of a dense rational matrix, computed in place.
/// Returns the pivot columns; zero rows are dropped.
pub fn rref<T: IntScalar>(m: &mut Vec<Vec<Ratio<T>>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..m[r].len() {
                    let delta = f.clone() * m[row][c].clone();
                    m[r][c] = m[r][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

/// One solution of `A·x = b`, with free variables set to zero; `None` when
/// the system is inconsistent.
pub fn solve<T: IntScalar>(a: &[Vec<Ratio<T>>], b: &[Ratio<T>]) -> Option<Vec<Ratio<T>>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Ratio<T>>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Ratio::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

/// Rank of a rational matrix.
pub fn rank<T: IntScalar>(a: &[Vec<Ratio<T>>]) -> usize {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut m = a.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of the right kernel `{x : A·x = 0}`.
pub fn kernel<T: IntScalar>(a: &[Vec<Ratio<T>>], ncols: usize) -> Vec<Vec<Ratio<T>>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Ratio::zero(); ncols];
            v[f] = Ratio::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Decides whether `{x : Σ_j a_ij x_j >= b_i}` is nonempty by
/// Fourier–Motzkin elimination.
pub fn feasible<T: IntScalar>(rows: &[(Vec<Ratio<T>>, Ratio<T>)]) -> bool {
    let Some(first) = rows.first() else {
        return true;
    };
    let mut system: Vec<(Vec<Ratio<T>>, Ratio<T>)> = rows.to_vec();
    let n = first.0.len();
    for var in (0..n).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (a, b) in system {
            if a[var].is_zero() {
                rest.push((a, b));
            } else if a[var].is_positive() {
                pos.push((a, b));
            } else {
                neg.push((a, b));
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                // Scale both rows so the eliminated coefficients are ±1.
                let sp = ap[var].recip();
                let sn = -an[var].recip();
                let a: Vec<Ratio<T>> =
                    ap.iter().zip(an).map(|(x, y)| x.clone() * sp.clone() + y.clone() * sn.clone()).collect();
                let b = bp.clone() * sp.clone() + bn.clone() * sn.clone();
                rest.push((a, b));
            }
        }
        system = dedup_rows(rest);
    }
    system.iter().all(|(_, b)| !b.is_positive())
}

fn dedup_rows<T: IntScalar>(mut rows: Vec<(Vec<Ratio<T>>, Ratio<T>)>) -> Vec<(Vec<Ratio<T>>, Ratio<T>)> {
    // Normalise each row by its first nonzero coefficient's magnitude, keep
    // the tightest bound per direction.
    for (a, b) in rows.iter_mut() {
        if let Some(s) = a.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
            for x in a.iter_mut() {
                *x = x.clone() / s.clone();
            }
            *b = b.clone() / s;
        }
    }
    rows.sort();
    let mut out: Vec<(Vec<Ratio<T>>, Ratio<T>)> = Vec::with_capacity(rows.len());
    for (a, b) in rows {
        match out.last_mut() {
            Some((la, lb)) if *la == a => {
                if b > *lb {
                    *lb = b;
                }
            }
            _ => out.push((a, b)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Ratio<i64> {
        Ratio::from_integer(n)
    }

    #[test]
    fn solves_square_system() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve(&a, &[q(5), q(10)]).unwrap();
        assert_eq!(x, vec![q(1), q(3)]);
    }

    #[test]
    fn detects_inconsistency() {
        let a = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(&a, &[q(1), q(3)]).is_none());
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn kernel_of_rank_one_row() {
        let a = vec![vec![q(1), q(-2), q(3)]];
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Ratio<i64> = a[0].iter().zip(v).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn fourier_motzkin() {
        // x >= 1, y >= 1, -x - y >= -1 is empty; dropping the last is not.
        let rows = vec![(vec![q(1), q(0)], q(1)), (vec![q(0), q(1)], q(1)), (vec![q(-1), q(-1)], q(-1))];
        assert!(!feasible(&rows));
        assert!(feasible(&rows[..2]));
        let rows = vec![(vec![q(1), q(0)], q(1)), (vec![q(-1), q(0)], q(-1))];
        assert!(feasible(&rows));
    }
}
