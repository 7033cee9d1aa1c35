//! Subtori and their translates in `Tⁿ = ℝⁿ/ℤⁿ`, with rational data.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::IntScalar;

use super::matrix::Matrix;
use super::snf::{hnf_rows, integer_kernel, snf};

/// Fractional part, in `[0, 1)`.
pub fn frac<I: IntScalar>(x: &Ratio<I>) -> Ratio<I> {
    x - x.floor()
}

fn dot_q<I: IntScalar>(a: &[I], x: &[Ratio<I>]) -> Ratio<I> {
    a.iter().zip(x).fold(Ratio::zero(), |acc, (ai, xi)| acc + xi * ai.clone())
}

/// A connected component `x + span(dirs)` of an intersection of toric
/// hyperplanes.
///
/// `dirs` is the Hermite basis of a saturated lattice. `eqs` is the Hermite
/// basis of its orthogonal lattice, so the flat is
/// `{x : eqs·x ≡ eqs·base (mod 1)}`. `base` is fixed by the flat alone: with
/// `U·eqs·V = [I 0]`, it is `V·(U·c, 0) mod 1` where `c = eqs·x mod 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToricFlat<I: IntScalar> {
    n: usize,
    dirs: Vec<Vec<I>>,
    base: Vec<Ratio<I>>,
    eqs: Vec<Vec<I>>,
}

impl<I: IntScalar> ToricFlat<I> {
    /// The flat through `point` spanned by `dirs`. `dirs` may be any set of
    /// integer vectors; the lattice they span is saturated first.
    pub fn new(n: usize, dirs: &[Vec<I>], point: &[Ratio<I>]) -> Result<Self> {
        if point.len() != n {
            return Err(Error::AmbientMismatch(n, point.len()));
        }
        if let Some(d) = dirs.iter().find(|d| d.len() != n) {
            return Err(Error::AmbientMismatch(n, d.len()));
        }
        let eqs = integer_kernel(&Matrix::from_rows(n, dirs.to_vec()));
        let dirs = integer_kernel(&Matrix::from_rows(n, eqs.clone()));
        let c: Vec<Ratio<I>> = eqs.iter().map(|e| frac(&dot_q(e, point))).collect();
        let base = canonical_base(n, &eqs, &c);
        Ok(Self { n, dirs, base, eqs })
    }

    /// The whole torus.
    pub fn whole(n: usize) -> Self {
        let dirs: Vec<Vec<I>> = Matrix::identity(n).into_rows();
        Self::new(n, &dirs, &vec![Ratio::zero(); n]).expect("dimensions agree")
    }

    pub fn point(p: &[Ratio<I>]) -> Self {
        Self::new(p.len(), &[], p).expect("dimensions agree")
    }

    /// The components of `{x : a·x ≡ b}`. A primitive normal gives one.
    pub fn hyperplane(normal: &[I], offset: &Ratio<I>) -> Vec<Self> {
        let a = Matrix::from_rows(normal.len(), vec![normal.to_vec()]);
        solve_torus(&a, std::slice::from_ref(offset)).into_flats(normal.len())
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dirs.len()
    }

    pub fn codim(&self) -> usize {
        self.n - self.dirs.len()
    }

    pub fn dirs(&self) -> &[Vec<I>] {
        &self.dirs
    }

    pub fn base(&self) -> &[Ratio<I>] {
        &self.base
    }

    /// `(C, c)` with the flat equal to `{x : C·x ≡ c (mod 1)}`.
    pub fn equations(&self) -> (&[Vec<I>], Vec<Ratio<I>>) {
        let c = self.eqs.iter().map(|e| frac(&dot_q(e, &self.base))).collect();
        (&self.eqs, c)
    }

    /// Whether `x` lies on the flat.
    pub fn contains_point(&self, x: &[Ratio<I>]) -> bool {
        let (eqs, c) = self.equations();
        x.len() == self.n && eqs.iter().zip(&c).all(|(e, ci)| frac(&(dot_q(e, x) - ci)).is_zero())
    }
}

fn canonical_base<I: IntScalar>(n: usize, eqs: &[Vec<I>], c: &[Ratio<I>]) -> Vec<Ratio<I>> {
    let s = snf(&Matrix::from_rows(n, eqs.to_vec()));
    debug_assert!(s.divisors().iter().all(|d| d.is_one()), "orthogonal lattice must be saturated");
    let mut y = vec![Ratio::zero(); n];
    for (i, yi) in y.iter_mut().enumerate().take(s.rank) {
        *yi = dot_q(s.u.row(i), c);
    }
    (0..n).map(|i| frac(&dot_q(s.v.row(i), &y))).collect()
}

impl<I: IntScalar> fmt::Debug for ToricFlat<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ToricFlat(base {:?}, dirs {:?})",
            self.base.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            self.dirs
        )
    }
}

impl<I: IntScalar> fmt::Display for ToricFlat<I> {
    /// `(0, 1/3) + <(1, 2)>`, or just the point for a 0-dimensional flat.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.base.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", coords.join(", "))?;
        if !self.dirs.is_empty() {
            let dirs: Vec<String> = self
                .dirs
                .iter()
                .map(|d| format!("({})", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
                .collect();
            write!(f, " + <{}>", dirs.join(", "))?;
        }
        Ok(())
    }
}

/// Solution set of a congruence system on the torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorusSolution<I: IntScalar> {
    Empty,
    /// Translates of one subtorus, spanned by `dirs`, one per base point.
    Components {
        dirs: Vec<Vec<I>>,
        bases: Vec<Vec<Ratio<I>>>,
    },
}

impl<I: IntScalar> TorusSolution<I> {
    pub fn len(&self) -> usize {
        match self {
            TorusSolution::Empty => 0,
            TorusSolution::Components { bases, .. } => bases.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonical flats, sorted.
    pub fn into_flats(self, n: usize) -> Vec<ToricFlat<I>> {
        match self {
            TorusSolution::Empty => Vec::new(),
            TorusSolution::Components { dirs, bases } => {
                let mut out: Vec<ToricFlat<I>> =
                    bases.iter().map(|b| ToricFlat::new(n, &dirs, b).expect("dimensions agree")).collect();
                out.sort();
                out
            }
        }
    }
}

/// `{x ∈ Tⁿ : A·x ≡ b (mod 1)}` via the Smith form `D = U·A·V`: with
/// `x = V·y` the system decouples into `d_i·y_i ≡ (U·b)_i`.
pub fn solve_torus<I: IntScalar>(a: &Matrix<I>, b: &[Ratio<I>]) -> TorusSolution<I> {
    assert_eq!(a.nrows(), b.len(), "one offset per row");
    let n = a.ncols();
    let s = snf(a);
    let ub: Vec<Ratio<I>> = (0..a.nrows()).map(|i| dot_q(s.u.row(i), b)).collect();
    if ub[s.rank..].iter().any(|x| !x.is_integer()) {
        return TorusSolution::Empty;
    }
    let divisors = s.divisors();
    let mut ys: Vec<Vec<Ratio<I>>> = vec![vec![Ratio::zero(); n]];
    for (i, d) in divisors.iter().enumerate() {
        let mut next = Vec::new();
        let mut j = I::zero();
        while &j < d {
            for y in &ys {
                let mut y = y.clone();
                y[i] = frac(&((ub[i].clone() + Ratio::from_integer(j.clone())) / Ratio::from_integer(d.clone())));
                next.push(y);
            }
            j = j + I::one();
        }
        ys = next;
    }
    let dirs = hnf_rows(&(s.rank..n).map(|j| s.v.col(j)).collect::<Vec<_>>(), n);
    let mut bases: Vec<Vec<Ratio<I>>> = ys
        .iter()
        .map(|y| {
            let x: Vec<Ratio<I>> = (0..n).map(|i| frac(&dot_q(s.v.row(i), y))).collect();
            ToricFlat::new(n, &dirs, &x).expect("dimensions agree").base
        })
        .collect();
    bases.sort();
    TorusSolution::Components { dirs, bases }
}

/// `inner ⊆ outer`.
pub fn flat_contains<I: IntScalar>(outer: &ToricFlat<I>, inner: &ToricFlat<I>) -> Result<bool> {
    if outer.n != inner.n {
        return Err(Error::AmbientMismatch(outer.n, inner.n));
    }
    let in_span = outer.eqs.iter().all(|e| inner.dirs.iter().all(|d| super::matrix::dot(e, d).is_zero()));
    Ok(in_span && outer.contains_point(&inner.base))
}

/// Connected components of `F ∩ G`, sorted.
pub fn flat_intersect<I: IntScalar>(f: &ToricFlat<I>, g: &ToricFlat<I>) -> Result<Vec<ToricFlat<I>>> {
    if f.n != g.n {
        return Err(Error::AmbientMismatch(f.n, g.n));
    }
    let (ef, cf) = f.equations();
    let (eg, cg) = g.equations();
    let rows: Vec<Vec<I>> = ef.iter().chain(eg).cloned().collect();
    let b: Vec<Ratio<I>> = cf.into_iter().chain(cg).collect();
    Ok(solve_torus(&Matrix::from_rows(f.n, rows), &b).into_flats(f.n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Ratio<i64> {
        Ratio::new(p, d)
    }

    fn line(a: i64, b: i64, c: Ratio<i64>) -> ToricFlat<i64> {
        let mut v = ToricFlat::hyperplane(&[a, b], &c);
        assert_eq!(v.len(), 1);
        v.pop().unwrap()
    }

    #[test]
    fn three_points() {
        let a = Matrix::from_i64(&[&[2, -1], &[1, -2]]);
        let sol = solve_torus(&a, &[q(0, 1), q(0, 1)]);
        let TorusSolution::Components { dirs, bases } = &sol else { panic!() };
        assert!(dirs.is_empty());
        assert_eq!(bases, &vec![vec![q(0, 1), q(0, 1)], vec![q(1, 3), q(2, 3)], vec![q(2, 3), q(1, 3)]]);
    }

    #[test]
    fn stacked_offsets() {
        let a = Matrix::from_i64(&[&[3, -1], &[0, 1]]);
        let sol = solve_torus(&a, &[q(0, 1), q(1, 5)]);
        let TorusSolution::Components { bases, .. } = sol else { panic!() };
        let xs: Vec<Ratio<i64>> = bases.iter().map(|b| b[0]).collect();
        assert_eq!(xs, vec![q(1, 15), q(6, 15), q(11, 15)]);
        assert!(bases.iter().all(|b| b[1] == q(1, 5)));
    }

    #[test]
    fn identity_and_unsolvable() {
        let sol = solve_torus(&Matrix::<i64>::identity(2), &[q(0, 1), q(0, 1)]);
        assert_eq!(sol.len(), 1);
        let parallel = solve_torus(&Matrix::from_i64(&[&[0, 1], &[0, 1]]), &[q(0, 1), q(1, 2)]);
        assert_eq!(parallel, TorusSolution::Empty);
    }

    #[test]
    fn intersections() {
        let y2x = line(-2, 1, q(0, 1));
        let x2y = line(1, -2, q(0, 1));
        let y3x = line(-3, 1, q(0, 1));
        assert_eq!(flat_intersect(&y2x, &x2y).unwrap().len(), 3);
        assert_eq!(flat_intersect(&y3x, &x2y).unwrap().len(), 5);
        let y0 = line(0, 1, q(0, 1));
        let yhalf = line(0, 1, q(1, 2));
        assert!(flat_intersect(&y0, &yhalf).unwrap().is_empty());
        for p in flat_intersect(&y3x, &x2y).unwrap() {
            assert!(flat_contains(&y3x, &p).unwrap());
            assert!(flat_contains(&x2y, &p).unwrap());
        }
    }

    #[test]
    fn containment() {
        let y3x = line(-3, 1, q(0, 1));
        assert!(flat_contains(&y3x, &ToricFlat::point(&[q(2, 5), q(1, 5)])).unwrap());
        let yfifth = line(0, 1, q(1, 5));
        assert!(!flat_contains(&yfifth, &ToricFlat::point(&[q(0, 1), q(0, 1)])).unwrap());
        assert!(flat_contains(&y3x, &y3x).unwrap());
        assert!(flat_contains(&ToricFlat::whole(2), &y3x).unwrap());
        assert!(!flat_contains(&y3x, &ToricFlat::whole(2)).unwrap());
        assert!(flat_contains(&ToricFlat::whole(3), &y3x).is_err());
    }

    #[test]
    fn canonical_form_ignores_presentation() {
        let a = ToricFlat::new(2, &[vec![1i64, 3]], &[q(2, 5), q(1, 5)]).unwrap();
        let b = ToricFlat::new(2, &[vec![-2i64, -6], vec![3, 9]], &[q(3, 5), q(4, 5)]).unwrap();
        assert_eq!(a, b);
        let c = ToricFlat::new(2, &[vec![2i64, 6]], &[q(2, 5), q(1, 5)]).unwrap();
        assert_eq!(a, c);
        assert_eq!(a.dirs(), &[vec![1, 3]]);
    }
}
