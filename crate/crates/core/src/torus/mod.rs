//! Arrangements of toric hyperplanes `a·x ≡ b (mod 1)` on `Tⁿ = ℝⁿ/ℤⁿ`.

mod regularity;

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euclid::{check_chain, interval_product};
use crate::hyperplane::{check_distinct, Hyperplane};
use crate::latbase::{flat_contains, flat_intersect, subsets, Matrix, ToricFlat};
use crate::ncpoly::{exact_half, h_prime, omega, phi_t, torus_normal_form, AbPolynomial, TorusNormalForm};
use crate::poset::{ab_index, AbIndexMethod, FlagVector, RankedPoset, Zaslavsky};
use crate::scalar::{sign_pow, IntScalar, Scalar};
use crate::unipoly::UniPolynomial;

pub use regularity::{corner_check, regularity_checks, CornerReport, RegularityCheck};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusArrangement<I: IntScalar> {
    n: usize,
    hyperplanes: Vec<Hyperplane<I>>,
}

impl<I: IntScalar> TorusArrangement<I> {
    /// Normalizes every hyperplane, reducing offsets mod 1.
    pub fn new(n: usize, hyperplanes: Vec<Hyperplane<I>>) -> Result<Self> {
        let hyperplanes = hyperplanes
            .into_iter()
            .map(|h| Hyperplane::toric(h.normal().to_vec(), h.offset().clone()))
            .collect::<Result<Vec<_>>>()?;
        check_distinct(n, &hyperplanes)?;
        Ok(Self { n, hyperplanes })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn hyperplanes(&self) -> &[Hyperplane<I>] {
        &self.hyperplanes
    }

    /// Normals as the rows of an `m × n` matrix.
    pub fn normal_matrix(&self) -> Matrix<I> {
        Matrix::from_rows(self.n, self.hyperplanes.iter().map(|h| h.normal().to_vec()).collect())
    }

    /// lcm of the absolute values of the nonzero `n × n` minors of the
    /// normal matrix; 1 when there are none.
    pub fn lcm_minors(&self) -> I {
        let a = self.normal_matrix();
        subsets(a.nrows(), self.n)
            .iter()
            .map(|rows| a.select_rows(rows).det().abs())
            .filter(|d| !d.is_zero())
            .fold(I::one(), |l, d| l.lcm(&d))
    }

    /// Whether some `n × n` minor is nonzero.
    pub fn is_essential(&self) -> bool {
        subsets(self.hyperplanes.len(), self.n)
            .iter()
            .any(|rows| !self.normal_matrix().select_rows(rows).det().is_zero())
    }

    /// Points of `((1/q)ℤ)ⁿ/ℤⁿ` off every hyperplane, by enumerating all
    /// `qⁿ` of them.
    pub fn lattice_point_count(&self, q: u64) -> u64 {
        assert!(q >= 1, "q must be positive");
        let qi = I::from_u64(q).expect("q fits the scalar type");
        // a·(k/q) ≡ b (mod 1) iff a·k·den - num·q ≡ 0 (mod q·den)
        let tests: Vec<(Vec<I>, I, I)> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let den = h.offset().denom().clone();
                let a = h.normal().iter().map(|x| x.clone() * den.clone()).collect();
                (a, h.offset().numer().clone() * qi.clone(), qi.clone() * den)
            })
            .collect();
        let mut k = vec![0u64; self.n];
        let mut count = 0;
        loop {
            let on_some = tests.iter().any(|(a, shift, modulus)| {
                let s = a
                    .iter()
                    .zip(&k)
                    .fold(I::zero(), |acc, (ai, &ki)| acc + ai.clone() * I::from_u64(ki).expect("fits"));
                (s - shift.clone()).is_multiple_of(modulus)
            });
            if !on_some {
                count += 1;
            }
            let Some(i) = (0..self.n).find(|&i| k[i] + 1 < q) else {
                break;
            };
            k[i] += 1;
            k[..i].iter_mut().for_each(|x| *x = 0);
        }
        count
    }
}

/// The intersection poset: connected components of intersections ordered
/// by reverse inclusion. Index 0 is `Tⁿ`; the last element is the empty
/// set at rank `n + 1`.
#[derive(Clone, Debug)]
pub struct ToricPoset<I: IntScalar> {
    n: usize,
    poset: RankedPoset,
    flats: Vec<Option<ToricFlat<I>>>,
}

/// The toric face ab-index with its split `t·(a-b)^{n+1} + Φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceIndex<T: IntScalar> {
    pub ab: AbPolynomial<T>,
    pub normal_form: Option<TorusNormalForm<T>>,
}

/// One flag f entry of the face poset against its power of two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisibility {
    pub set: Vec<usize>,
    pub value: i64,
    pub divisor: i64,
    pub ok: bool,
}

pub fn build_poset<I: IntScalar>(a: &TorusArrangement<I>) -> Result<ToricPoset<I>> {
    let n = a.n;
    let hs: Vec<ToricFlat<I>> =
        a.hyperplanes.iter().flat_map(|h| ToricFlat::hyperplane(h.normal(), h.offset())).collect();
    let whole = ToricFlat::whole(n);
    let mut seen = BTreeSet::from([whole.clone()]);
    let mut queue = vec![whole];
    while let Some(f) = queue.pop() {
        for h in &hs {
            for g in flat_intersect(&f, h)? {
                if seen.insert(g.clone()) {
                    queue.push(g);
                }
            }
        }
    }
    let mut flats: Vec<Option<ToricFlat<I>>> = seen.into_iter().map(Some).collect();
    flats.sort_by(|x, y| {
        let (x, y) = (x.as_ref().expect("nonempty"), y.as_ref().expect("nonempty"));
        x.codim().cmp(&y.codim()).then_with(|| x.cmp(y))
    });
    flats.push(None);
    let ranks: Vec<usize> = flats.iter().map(|f| f.as_ref().map_or(n + 1, |f| f.codim())).collect();
    let mut rel = Vec::new();
    for (i, x) in flats.iter().enumerate() {
        for (j, y) in flats.iter().enumerate() {
            if ranks[i] >= ranks[j] {
                continue;
            }
            let below = match (x, y) {
                (Some(x), Some(y)) => flat_contains(x, y)?,
                (_, None) => true,
                (None, Some(_)) => false,
            };
            if below {
                rel.push((i, j));
            }
        }
    }
    let poset = RankedPoset::new(ranks, &rel)?;
    Ok(ToricPoset { n, poset, flats })
}

impl<I: IntScalar> ToricPoset<I> {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn poset(&self) -> &RankedPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flat(&self, x: usize) -> Option<&ToricFlat<I>> {
        self.flats[x].as_ref()
    }

    pub fn label(&self, x: usize) -> String {
        self.flats[x].as_ref().map_or_else(|| "empty".to_string(), |f| f.to_string())
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.poset.level_sizes()
    }

    /// Indices of the 0-dimensional flats.
    pub fn points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.flats[x].as_ref().is_some_and(|f| f.dim() == 0)).collect()
    }

    /// `Σ μ(0̂, x) t^{dim x}` over every element except the empty top.
    pub fn char_poly(&self) -> UniPolynomial<i64> {
        let row = self.poset.mobius_row(self.poset.bottom());
        let mut chi = UniPolynomial::zero();
        for (x, f) in self.flats.iter().enumerate() {
            if let Some(f) = f {
                chi.add_term(row[x], f.dim());
            }
        }
        chi
    }

    /// `Z_t`, checked against `(-1)ⁿ χ(0)`. Without points the regions are
    /// not balls and the two disagree; `Z_t` is returned unchecked then.
    pub fn region_count(&self) -> Result<i64> {
        let zt = self.poset.zaslavsky(Zaslavsky::Zt);
        if self.points().is_empty() {
            return Ok(zt);
        }
        let by_chi = sign_pow::<i64>(self.n) * self.char_poly().eval(&0);
        if by_chi != zt {
            return Err(Error::ConsistencyFailure(format!("(-1)^n χ(0) = {by_chi} but Z_t = {zt}")));
        }
        Ok(zt)
    }

    /// `(f_1, …, f_{n+1})` from Möbius sums down to the points.
    pub fn f_vector_mobius(&self) -> Vec<i64> {
        let points = self.points();
        (0..=self.n)
            .map(|i| {
                let total: i64 = (0..self.len())
                    .filter(|&x| self.flats[x].as_ref().is_some_and(|f| f.dim() == i))
                    .map(|x| {
                        let row = self.poset.mobius_row(x);
                        points.iter().map(|&y| row[y]).sum::<i64>()
                    })
                    .sum();
                sign_pow::<i64>(i) * total
            })
            .collect()
    }

    /// `(f_1, …, f_{n+1})` from the flag h-vector of the poset.
    pub fn f_vector_flag_h(&self) -> Result<Vec<i64>> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidInput("the torus must have positive dimension".into()));
        }
        let (_, h) = crate::poset::flag_vectors::<i64>(&self.poset)?;
        let range = |i: usize, j: usize| (i..=j).collect::<Vec<_>>();
        let h_of = |s: Vec<usize>| -> Result<i64> { h.get(&s).copied() };
        let mut f = vec![1 + h_of(vec![n])?];
        for i in 1..n {
            f.push(
                h_of(range(n - i, n))?
                    + h_of(range(n - i, n - 1))?
                    + h_of(range(n - i + 1, n))?
                    + h_of(range(n - i + 1, n - 1))?,
            );
        }
        f.push(h_of(range(1, n - 1))? + h_of(range(1, n))?);
        Ok(f)
    }

    /// Both f-vector routes, which must agree.
    pub fn f_vector(&self) -> Result<Vec<i64>> {
        let a = self.f_vector_mobius();
        let b = self.f_vector_flag_h()?;
        if a != b {
            return Err(Error::ConsistencyFailure(format!("Möbius sums give {a:?}, flag h gives {b:?}")));
        }
        Ok(a)
    }

    pub fn ab_index<T: Scalar>(&self) -> Result<AbPolynomial<T>> {
        ab_index(&self.poset, AbIndexMethod::FlagH)
    }

    /// `(a-b)^{n+1} + ½·ω(a·H'(Ψ(𝒫))·b)*`, cross-checked against
    /// `φ_t(Ψ(𝒫 ∪ {0̂}))*`.
    pub fn face_ab_index<T: IntScalar>(&self) -> Result<FaceIndex<T>> {
        let psi = self.ab_index::<T>()?;
        let inner = &(&AbPolynomial::a() * &h_prime(&psi)) * &AbPolynomial::b();
        let half = exact_half(&omega(&inner))?.reverse();
        let ab = &AbPolynomial::a_minus_b_pow(self.n + 1) + &half.to_ab();
        let other = phi_t(&ab_index::<T>(&self.poset.adjoin_bottom(), AbIndexMethod::FlagH)?)?.reverse();
        if other != ab {
            return Err(Error::ConsistencyFailure(format!("½ω route gives {ab}, φ_t route gives {other}")));
        }
        let normal_form = torus_normal_form(&ab, self.n)?;
        Ok(FaceIndex { ab, normal_form })
    }

    /// Flag f-vector of the face poset, read off the face ab-index.
    pub fn face_flag_f(&self) -> Result<FlagVector<i64>> {
        let face = self.face_ab_index::<i64>()?;
        Ok(FlagVector::from_ab(&face.ab, self.n + 2)?.h_to_f())
    }

    /// Every nonempty `S`: is `f_S` divisible by `2^{|S|-1}`?
    pub fn divisibility_check(&self) -> Result<Vec<Divisibility>> {
        let f = self.face_flag_f()?;
        Ok(f.by_size()
            .into_iter()
            .filter(|(s, _)| !s.is_empty())
            .map(|(set, value)| {
                let divisor = 1i64 << (set.len() - 1);
                Divisibility { ok: value % divisor == 0, set, value, divisor }
            })
            .collect())
    }

    /// Face chains over `0̂ < x_1 < ⋯ < x_k`, `k >= 2`, with `chain` listing
    /// `x_1, …, x_k` and `x_k` the empty top.
    pub fn toric_fiber(&self, chain: &[usize]) -> Result<i64> {
        check_chain(&self.poset, chain)?;
        if chain.len() < 2 {
            return Err(Error::NotAChain("the toric formula needs k >= 2".into()));
        }
        interval_product(&self.poset, chain, Zaslavsky::Zt)
    }

    /// Whether `x` lies on hyperplane `h` of `a`, for a flat index `x`.
    pub(crate) fn flat_ref(&self, x: usize) -> &ToricFlat<I> {
        self.flats[x].as_ref().expect("not the empty top")
    }
}

/// `Σ (-1)^{i-1} f_i`
pub fn euler_sum(f: &[i64]) -> i64 {
    f.iter().enumerate().map(|(i, v)| sign_pow::<i64>(i) * v).sum()
}

pub(crate) fn ratio_dot<I: IntScalar>(a: &[I], x: &[Ratio<I>]) -> Ratio<I> {
    a.iter().zip(x).fold(Ratio::from_integer(I::zero()), |acc, (ai, xi)| acc + xi * ai.clone())
}
