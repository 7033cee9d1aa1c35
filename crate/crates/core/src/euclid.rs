//! Arrangements of affine hyperplanes in `ℚⁿ`.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperplane::{check_distinct, Hyperplane};
use crate::latbase::{affine_contains, affine_intersect, linsolve, AffineFlat};
use crate::ncpoly::{omega, phi, phi_ub, AbPolynomial, CdPolynomial};
use crate::poset::{ab_index, AbIndexMethod, RankedPoset, Zaslavsky};
use crate::scalar::{sign_pow, IntScalar, Scalar};
use crate::unipoly::UniPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclidArrangement<I: IntScalar> {
    n: usize,
    hyperplanes: Vec<Hyperplane<I>>,
}

impl<I: IntScalar> EuclidArrangement<I> {
    pub fn new(n: usize, hyperplanes: Vec<Hyperplane<I>>) -> Result<Self> {
        check_distinct(n, &hyperplanes)?;
        Ok(Self { n, hyperplanes })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn hyperplanes(&self) -> &[Hyperplane<I>] {
        &self.hyperplanes
    }

    /// Dimension of the span of the normals.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Ratio<I>>> = self
            .hyperplanes
            .iter()
            .map(|h| h.normal().iter().map(|x| Ratio::from_integer(x.clone())).collect())
            .collect();
        linsolve::rank(&rows)
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.n
    }

    fn flats(&self) -> Vec<AffineFlat<I>> {
        self.hyperplanes
            .iter()
            .map(|h| AffineFlat::hyperplane(h.normal(), h.offset()).expect("normal is nonzero"))
            .collect()
    }
}

/// Whether a fiber count follows the central or the unbounded formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FiberVariant {
    Central,
    Unbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionCounts {
    pub regions: i64,
    pub bounded: i64,
    pub unbounded: i64,
}

/// The intersection lattice, ordered by reverse inclusion. Elements are
/// sorted by rank and then by flat; the bottom (index 0) is the whole
/// space, the top is the point flat or the adjoined empty set at rank
/// `n + 1`.
#[derive(Clone, Debug)]
pub struct IntersectionLattice<I: IntScalar> {
    n: usize,
    poset: RankedPoset,
    /// `None` is the empty set.
    flats: Vec<Option<AffineFlat<I>>>,
}

pub fn build_lattice<I: IntScalar>(a: &EuclidArrangement<I>) -> Result<IntersectionLattice<I>> {
    let n = a.n;
    let rank = a.rank();
    if rank != n {
        return Err(Error::NotEssential { n, rank });
    }
    let hs = a.flats();
    let whole = AffineFlat::whole(n);
    let mut seen = BTreeSet::from([whole.clone()]);
    let mut queue = vec![whole];
    let mut empty = false;
    while let Some(f) = queue.pop() {
        for h in &hs {
            match affine_intersect(&f, h)? {
                Some(g) => {
                    if seen.insert(g.clone()) {
                        queue.push(g);
                    }
                }
                None => empty = true,
            }
        }
    }
    let mut flats: Vec<Option<AffineFlat<I>>> = seen.into_iter().map(Some).collect();
    flats.sort_by(|x, y| {
        let (x, y) = (x.as_ref().expect("nonempty"), y.as_ref().expect("nonempty"));
        x.codim().cmp(&y.codim()).then_with(|| x.cmp(y))
    });
    if empty {
        flats.push(None);
    }
    let ranks: Vec<usize> = flats.iter().map(|f| f.as_ref().map_or(n + 1, |f| f.codim())).collect();
    let mut rel = Vec::new();
    for (i, x) in flats.iter().enumerate() {
        for (j, y) in flats.iter().enumerate() {
            if ranks[i] >= ranks[j] {
                continue;
            }
            let below = match (x, y) {
                (Some(x), Some(y)) => affine_contains(x, y)?,
                (_, None) => true,
                (None, Some(_)) => false,
            };
            if below {
                rel.push((i, j));
            }
        }
    }
    let poset = RankedPoset::new(ranks, &rel)?;
    Ok(IntersectionLattice { n, poset, flats })
}

impl<I: IntScalar> IntersectionLattice<I> {
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

    /// `None` for the empty-set top.
    pub fn flat(&self, x: usize) -> Option<&AffineFlat<I>> {
        self.flats[x].as_ref()
    }

    pub fn label(&self, x: usize) -> String {
        self.flats[x].as_ref().map_or_else(|| "empty".to_string(), |f| f.to_string())
    }

    /// The top is a point rather than the empty set.
    pub fn is_central(&self) -> bool {
        self.flats[self.poset.top()].is_some()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.poset.level_sizes()
    }

    /// `χ(t) = Σ_{x ≠ ∅} μ(0̂, x) t^{dim x}`
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

    /// Regions and bounded regions from `χ(∓1)`, checked against the
    /// Zaslavsky invariants of the lattice.
    pub fn region_counts(&self) -> Result<RegionCounts> {
        let chi = self.char_poly();
        let sign = sign_pow::<i64>(self.n);
        let regions = sign * chi.eval(&-1);
        let bounded = sign * chi.eval(&1);
        let counts = RegionCounts { regions, bounded, unbounded: regions - bounded };
        let p = &self.poset;
        let z = p.zaslavsky(Zaslavsky::Z);
        let (by_z, bounded_z, unbounded_z) = if self.is_central() {
            (z, counts.bounded, counts.unbounded)
        } else {
            (z - p.zaslavsky(Zaslavsky::Zb), p.zaslavsky(Zaslavsky::Zb), p.zaslavsky(Zaslavsky::Zub))
        };
        if (by_z, bounded_z, unbounded_z) != (regions, bounded, counts.unbounded) {
            return Err(Error::ConsistencyFailure(format!(
                "characteristic polynomial gives {counts:?}, Zaslavsky invariants give \
                 ({by_z}, {bounded_z}, {unbounded_z})"
            )));
        }
        Ok(counts)
    }

    pub fn ab_index<T: Scalar>(&self) -> Result<AbPolynomial<T>> {
        ab_index(&self.poset, AbIndexMethod::FlagH)
    }

    /// `ω(a·Ψ(L))*`, the cd-index of the face lattice of a central
    /// arrangement. Cross-checked against `φ(Ψ(L ∪ {0̂}))*`.
    pub fn central_face_cd_index<T: Scalar>(&self) -> Result<CdPolynomial<T>> {
        if !self.is_central() {
            return Err(Error::NotCentral);
        }
        let a = AbPolynomial::<T>::a();
        let cd = omega(&(&a * &self.ab_index()?)).reverse();
        let other = phi(&ab_index::<T>(&self.poset.adjoin_bottom(), AbIndexMethod::FlagH)?)?.reverse();
        if other != cd.to_ab() {
            return Err(Error::ConsistencyFailure(format!("ω route gives {cd}, φ route gives {other}")));
        }
        Ok(cd)
    }

    /// `L_ub`: the lattice without its coatoms, as the rank selection
    /// `{1, …, n-1}`.
    pub fn unbounded_lattice(&self) -> Result<RankedPoset> {
        if self.is_central() {
            return Err(Error::NotNonCentral);
        }
        self.poset.rank_selection(&(1..self.n).collect::<Vec<_>>())
    }

    /// `ω(a·Ψ(L_ub))*`, the cd-index of the complex of unbounded faces.
    /// Cross-checked against `φ_ub(Ψ(L ∪ {0̂})) = Ψ(T_ub)*·(a-b)`.
    pub fn unbounded_cd_index<T: Scalar>(&self) -> Result<CdPolynomial<T>> {
        let l_ub = self.unbounded_lattice()?;
        let a = AbPolynomial::<T>::a();
        let starred = omega(&(&a * &ab_index(&l_ub, AbIndexMethod::FlagH)?));
        let q = phi_ub(&ab_index::<T>(&self.poset.adjoin_bottom(), AbIndexMethod::FlagH)?)?;
        let expected = &starred.to_ab() * &AbPolynomial::a_minus_b();
        if q != expected {
            return Err(Error::ConsistencyFailure(format!("φ_ub gives {q}, ω route times (a-b) gives {expected}")));
        }
        Ok(starred.reverse())
    }

    /// Number of face chains over `0̂ < x_1 < ⋯ < x_k`, where `chain` lists
    /// `x_1, …, x_k` (the adjoined `0̂` is implicit) and `x_k` is the top.
    pub fn bs_fiber(&self, chain: &[usize], variant: FiberVariant) -> Result<i64> {
        match (variant, self.is_central()) {
            (FiberVariant::Central, false) => {
                return Err(Error::VariantMismatch("the central formula needs a central arrangement".into()))
            }
            (FiberVariant::Unbounded, true) => {
                return Err(Error::VariantMismatch("the unbounded formula needs a non-central arrangement".into()))
            }
            _ => {}
        }
        check_chain(&self.poset, chain)?;
        if variant == FiberVariant::Unbounded && chain.len() < 2 {
            return Err(Error::NotAChain("the unbounded formula needs k >= 2".into()));
        }
        interval_product(
            &self.poset,
            chain,
            match variant {
                FiberVariant::Central => Zaslavsky::Z,
                FiberVariant::Unbounded => Zaslavsky::Zub,
            },
        )
    }
}

/// `chain` must be strictly increasing and end at the top.
pub(crate) fn check_chain(p: &RankedPoset, chain: &[usize]) -> Result<()> {
    if let Some(&x) = chain.iter().find(|&&x| x >= p.len()) {
        return Err(Error::NotAChain(format!("element {x} does not exist")));
    }
    if chain.last() != Some(&p.top()) {
        return Err(Error::NotAChain(format!("the chain must end at the top element {}", p.top())));
    }
    if let Some(w) = chain.windows(2).find(|w| !p.lt(w[0], w[1])) {
        return Err(Error::NotAChain(format!("{} < {} does not hold", w[0], w[1])));
    }
    Ok(())
}

/// `∏ Z([x_{i-1}, x_i])` over consecutive pairs, with `last` used for the
/// final interval.
pub(crate) fn interval_product(p: &RankedPoset, chain: &[usize], last: Zaslavsky) -> Result<i64> {
    let mut product = 1;
    for (i, w) in chain.windows(2).enumerate() {
        let kind = if i + 2 == chain.len() { last } else { Zaslavsky::Z };
        product *= p.interval(w[0], w[1])?.zaslavsky(kind);
    }
    Ok(product)
}
