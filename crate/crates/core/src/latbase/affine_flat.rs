//! Affine subspaces of `ℚⁿ` in reduced row-echelon form.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::IntScalar;

use super::linsolve::rref;

/// `{x : A·x = b}` with `[A | b]` in reduced row-echelon form and `A` of
/// full row rank. Never empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineFlat<I: IntScalar> {
    n: usize,
    rows: Vec<Vec<Ratio<I>>>,
}

impl<I: IntScalar> AffineFlat<I> {
    pub fn whole(n: usize) -> Self {
        Self { n, rows: Vec::new() }
    }

    /// `None` when the equations have no common solution.
    pub fn from_equations(n: usize, eqs: &[(Vec<Ratio<I>>, Ratio<I>)]) -> Result<Option<Self>> {
        let mut rows = Vec::with_capacity(eqs.len());
        for (a, b) in eqs {
            if a.len() != n {
                return Err(Error::AmbientMismatch(n, a.len()));
            }
            let mut r = a.clone();
            r.push(b.clone());
            rows.push(r);
        }
        Ok(affine_canonicalize(n, rows))
    }

    pub fn hyperplane(normal: &[I], offset: &Ratio<I>) -> Result<Self> {
        if normal.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidInput("hyperplane normal is zero".into()));
        }
        let a = normal.iter().map(|x| Ratio::from_integer(x.clone())).collect();
        Ok(Self::from_equations(normal.len(), &[(a, offset.clone())])?.expect("a hyperplane is nonempty"))
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    /// Rows `(a, b)` of the canonical system.
    pub fn equations(&self) -> impl Iterator<Item = (&[Ratio<I>], &Ratio<I>)> {
        self.rows.iter().map(|r| (&r[..self.n], &r[self.n]))
    }

    pub fn contains_point(&self, x: &[Ratio<I>]) -> bool {
        x.len() == self.n
            && self
                .equations()
                .all(|(a, b)| a.iter().zip(x).fold(Ratio::zero(), |acc: Ratio<I>, (ai, xi)| acc + ai * xi) == *b)
    }
}

/// Canonical RREF of an augmented system `[A | b]`; `None` if inconsistent.
pub fn affine_canonicalize<I: IntScalar>(n: usize, mut rows: Vec<Vec<Ratio<I>>>) -> Option<AffineFlat<I>> {
    let pivots = rref(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    Some(AffineFlat { n, rows })
}

pub fn affine_intersect<I: IntScalar>(f: &AffineFlat<I>, g: &AffineFlat<I>) -> Result<Option<AffineFlat<I>>> {
    if f.n != g.n {
        return Err(Error::AmbientMismatch(f.n, g.n));
    }
    Ok(affine_canonicalize(f.n, f.rows.iter().chain(&g.rows).cloned().collect()))
}

/// `inner ⊆ outer`: the equations of `outer` add nothing to those of `inner`.
pub fn affine_contains<I: IntScalar>(outer: &AffineFlat<I>, inner: &AffineFlat<I>) -> Result<bool> {
    Ok(affine_intersect(outer, inner)?.as_ref() == Some(inner))
}

impl<I: IntScalar> fmt::Debug for AffineFlat<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineFlat({self})")
    }
}

impl<I: IntScalar> fmt::Display for AffineFlat<I> {
    /// `{x1 = 0, x2 - x3 = 1/2}`, `R^n` for the whole space.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "R^{}", self.n);
        }
        let eqs: Vec<String> = self
            .equations()
            .map(|(a, b)| {
                let mut s = String::new();
                for (i, c) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let neg = c < &Ratio::zero();
                    let mag = if neg { -c.clone() } else { c.clone() };
                    s += match (s.is_empty(), neg) {
                        (true, true) => "-",
                        (true, false) => "",
                        (false, true) => " - ",
                        (false, false) => " + ",
                    };
                    if mag != Ratio::from_integer(I::one()) {
                        s += &format!("{mag}*");
                    }
                    s += &format!("x{}", i + 1);
                }
                format!("{s} = {b}")
            })
            .collect();
        write!(f, "{{{}}}", eqs.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(normal: &[i64], off: i64) -> AffineFlat<i64> {
        AffineFlat::hyperplane(normal, &Ratio::from_integer(off)).unwrap()
    }

    #[test]
    fn basic_intersections() {
        let o = affine_intersect(&h(&[1, 0], 0), &h(&[0, 1], 0)).unwrap().unwrap();
        assert_eq!(o.dim(), 0);
        assert!(o.contains_point(&[Ratio::zero(), Ratio::zero()]));
        assert_eq!(affine_intersect(&h(&[1, 0], 0), &h(&[1, 0], 1)).unwrap(), None);
        assert_eq!(h(&[2, 0], 2), h(&[1, 0], 1));
        assert_eq!(o.to_string(), "{x1 = 0, x2 = 0}");
    }

    #[test]
    fn cube_edges() {
        let planes: Vec<AffineFlat<i64>> = (0..3)
            .flat_map(|i| (0..2).map(move |v| (i, v)))
            .map(|(i, v)| {
                let mut n = vec![0; 3];
                n[i] = 1;
                h(&n, v)
            })
            .collect();
        let mut lines = Vec::new();
        for (i, p) in planes.iter().enumerate() {
            for q in &planes[i + 1..] {
                if let Some(l) = affine_intersect(p, q).unwrap() {
                    if !lines.contains(&l) {
                        lines.push(l);
                    }
                }
            }
        }
        assert_eq!(lines.len(), 12);
        assert!(lines.iter().all(|l| l.dim() == 1));
    }

    #[test]
    fn containment() {
        let x0 = h(&[1, 0, 0], 0);
        let line = affine_intersect(&x0, &h(&[0, 1, 0], 0)).unwrap().unwrap();
        assert!(affine_contains(&x0, &line).unwrap());
        assert!(!affine_contains(&line, &x0).unwrap());
        assert!(affine_contains(&AffineFlat::whole(3), &x0).unwrap());
        assert!(affine_contains(&x0, &x0).unwrap());
    }
}
