//! Flag f- and h-vectors indexed by rank sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncpoly::{Ab, AbPolynomial, AbWord};
use crate::scalar::{sign_pow, Scalar};

use super::RankedPoset;

/// A function on subsets `S ⊆ {1, …, rank-1}`. Subsets are bitmasks with
/// bit `i-1` standing for `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct FlagVector<T> {
    rank: usize,
    values: Vec<T>,
}

pub fn mask_of(set: &[usize]) -> usize {
    set.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

pub fn set_of(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

impl<T: Scalar> FlagVector<T> {
    pub fn from_values(rank: usize, values: Vec<T>) -> Result<Self> {
        if rank == 0 || values.len() != 1 << (rank - 1) {
            return Err(Error::InvalidRankSet(format!(
                "rank {rank} needs {} values, got {}",
                if rank == 0 { 0 } else { 1usize << (rank - 1) },
                values.len()
            )));
        }
        Ok(Self { rank, values })
    }

    /// Rank of the poset the vector belongs to; sets live in `{1..rank-1}`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get_mask(&self, mask: usize) -> &T {
        &self.values[mask]
    }

    pub fn get(&self, set: &[usize]) -> Result<&T> {
        if set.iter().any(|&i| i == 0 || i >= self.rank) {
            return Err(Error::InvalidRankSet(format!("{set:?} is not inside 1..{}", self.rank)));
        }
        Ok(&self.values[mask_of(set)])
    }

    /// Values in bitmask order: `∅, {1}, {2}, {1,2}, …`.
    pub fn by_mask(&self) -> &[T] {
        &self.values
    }

    /// `(set, value)` pairs ordered by set size, then lexicographically.
    pub fn by_size(&self) -> Vec<(Vec<usize>, T)> {
        let mut sets: Vec<Vec<usize>> = (0..self.values.len()).map(set_of).collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sets.into_iter()
            .map(|s| {
                let v = self.values[mask_of(&s)].clone();
                (s, v)
            })
            .collect()
    }

    /// `h_S = Σ_{T ⊆ S} (-1)^{|S-T|} f_T`
    pub fn f_to_h(&self) -> Self {
        self.mobius_transform(true)
    }

    /// `f_S = Σ_{T ⊆ S} h_T`
    pub fn h_to_f(&self) -> Self {
        self.mobius_transform(false)
    }

    fn mobius_transform(&self, signed: bool) -> Self {
        let values = (0..self.values.len())
            .map(|s| {
                let mut acc = T::zero();
                let mut t = s;
                loop {
                    let v = self.values[t].clone();
                    let gap = (s ^ t).count_ones() as usize;
                    acc = acc + if signed { sign_pow::<T>(gap) * v } else { v };
                    if t == 0 {
                        break;
                    }
                    t = (t - 1) & s;
                }
                acc
            })
            .collect();
        Self { rank: self.rank, values }
    }

    /// `Σ_S h_S u_S` with `u_S` the word having `b` exactly at the positions
    /// in `S`.
    pub fn to_ab(&self) -> AbPolynomial<T> {
        AbPolynomial::from_terms(self.values.iter().enumerate().map(|(s, h)| {
            let w: AbWord = (0..self.rank - 1).map(|i| if s >> i & 1 == 1 { Ab::B } else { Ab::A }).collect();
            (w, h.clone())
        }))
    }

    /// Reads the flag h-vector off an ab-polynomial of degree `rank - 1`.
    pub fn from_ab(p: &AbPolynomial<T>, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRankSet("rank must be positive".into()));
        }
        let mut values = vec![T::zero(); 1 << (rank - 1)];
        for (w, c) in p.terms() {
            if w.len() != rank - 1 {
                return Err(Error::InvalidInput(format!("word {w} does not have length {}", rank - 1)));
            }
            let mask = w.letters().iter().enumerate().fold(0, |m, (i, l)| match l {
                Ab::B => m | 1 << i,
                Ab::A => m,
            });
            values[mask] = c.clone();
        }
        Ok(Self { rank, values })
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> FlagVector<U> {
        FlagVector { rank: self.rank, values: self.values.iter().map(f).collect() }
    }
}

impl<T: Scalar> fmt::Display for FlagVector<T> {
    /// `(f_∅, f_1, f_2, f_12, …)` in bitmask order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Number of chains `0̂ < x_1 < ⋯ < x_k < 1̂` with `ρ(x_i)` running through
/// the rank set, for every rank set.
pub fn flag_f<T: Scalar>(p: &RankedPoset) -> FlagVector<T> {
    let rank = p.poset_rank();
    let by_rank: Vec<Vec<usize>> = (0..=rank).map(|r| p.elements_of_rank(r)).collect();
    let values = (0..1usize << rank.saturating_sub(1))
        .map(|mask| {
            let mut counts = vec![(p.bottom(), T::one())];
            for r in set_of(mask) {
                counts = by_rank[r]
                    .iter()
                    .map(|&y| {
                        let c =
                            counts.iter().filter(|(x, _)| p.lt(*x, y)).fold(T::zero(), |acc, (_, c)| acc + c.clone());
                        (y, c)
                    })
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
            counts.iter().filter(|(x, _)| p.lt(*x, p.top())).fold(T::zero(), |acc, (_, c)| acc + c.clone())
        })
        .collect();
    FlagVector { rank, values }
}

/// Flag f- and h-vectors. Requires `ρ(1̂) >= 1`.
pub fn flag_vectors<T: Scalar>(p: &RankedPoset) -> Result<(FlagVector<T>, FlagVector<T>)> {
    if p.poset_rank() == 0 {
        return Err(Error::InvalidPoset("flag vectors need rank at least 1".into()));
    }
    let f = flag_f::<T>(p);
    let h = f.f_to_h();
    Ok((f, h))
}

/// Checks `μ(P(S)) = (-1)^{|S|-1} h_S` for every rank set `S`.
pub fn philip_hall_check(p: &RankedPoset) -> Result<bool> {
    let (_, h) = flag_vectors::<i64>(p)?;
    for mask in 0..h.by_mask().len() {
        let s = set_of(mask);
        let selected = p.rank_selection(&s)?;
        let expected = -sign_pow::<i64>(s.len()) * h.get_mask(mask);
        if selected.mobius_poset() != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{boolean_lattice, butterfly};

    #[test]
    fn boolean_rank_two() {
        let (f, h) = flag_vectors::<i64>(&boolean_lattice(2)).unwrap();
        assert_eq!(f.get(&[1]), Ok(&2));
        assert_eq!(h.get(&[1]), Ok(&1));
        assert_eq!(h.h_to_f(), f);
    }

    #[test]
    fn boolean_rank_three_h_is_eulerian_numbers() {
        let (_, h) = flag_vectors::<i64>(&boolean_lattice(3)).unwrap();
        assert_eq!(h.by_mask(), &[1, 2, 2, 1]);
        assert!(philip_hall_check(&boolean_lattice(3)).unwrap());
        assert!(philip_hall_check(&butterfly(4)).unwrap());
    }

    #[test]
    fn ab_round_trip() {
        let h = FlagVector::from_values(3, vec![1i64, 2, 6, 6]).unwrap();
        let p = h.to_ab();
        assert_eq!(p.to_string(), "a^2 + 6*ab + 2*ba + 6*b^2");
        assert_eq!(FlagVector::from_ab(&p, 3).unwrap(), h);
    }

    #[test]
    fn by_size_order() {
        let f = FlagVector::from_values(4, (0..8i64).collect()).unwrap();
        let sets: Vec<Vec<usize>> = f.by_size().into_iter().map(|(s, _)| s).collect();
        assert_eq!(sets[1..4], [vec![1], vec![2], vec![3]]);
        assert_eq!(sets[4..7], [vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
