use crate::error::{Error, Result};

use super::RankedPoset;

impl RankedPoset {
    /// Order reversed, `ρ*(x) = ρ(1̂) - ρ(x)`.
    pub fn dual(&self) -> RankedPoset {
        let top = self.poset_rank();
        let ranks = self.ranks.iter().map(|&r| top - r).collect();
        let covers: Vec<(usize, usize)> = self.covers().into_iter().map(|(x, y)| (y, x)).collect();
        RankedPoset::new(ranks, &covers).expect("dual of a valid poset is valid")
    }

    /// Keeps the listed elements with new ranks; the
    /// order is induced. Returns the poset and the old index of every new
    /// element.
    fn induced(&self, keep: &[usize], rank: impl Fn(usize) -> usize) -> (RankedPoset, Vec<usize>) {
        let ranks = keep.iter().map(|&x| rank(x)).collect();
        let mut rel = Vec::new();
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                if self.lt(x, y) {
                    rel.push((i, j));
                }
            }
        }
        let p = RankedPoset::new(ranks, &rel).expect("induced subposet with bottom and top is valid");
        (p, keep.to_vec())
    }

    /// The interval `[x, y]` re-ranked from `x`, with the old index of every
    /// element.
    pub fn interval_with_map(&self, x: usize, y: usize) -> Result<(RankedPoset, Vec<usize>)> {
        self.check_pair(x, y)?;
        let keep: Vec<usize> = self.up_set(x).filter(|&z| self.leq(z, y)).collect();
        let base = self.rank(x);
        Ok(self.induced(&keep, |z| self.rank(z) - base))
    }

    pub fn interval(&self, x: usize, y: usize) -> Result<RankedPoset> {
        Ok(self.interval_with_map(x, y)?.0)
    }

    /// `P(S)`: `0̂`, `1̂` and the elements with rank in `S`, where the
    /// `i`-th smallest rank of `S` becomes rank `i`.
    pub fn rank_selection_with_map(&self, s: &[usize]) -> Result<(RankedPoset, Vec<usize>)> {
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != s.len() || sorted.iter().any(|&r| r == 0 || r >= self.poset_rank()) {
            return Err(Error::InvalidRankSet(format!("{s:?} must be distinct ranks inside 1..{}", self.poset_rank())));
        }
        let keep: Vec<usize> = self
            .linear_extension()
            .iter()
            .copied()
            .filter(|&x| x == self.bottom || x == self.top || sorted.contains(&self.rank(x)))
            .collect();
        let top = self.top;
        Ok(self.induced(&keep, |x| {
            if x == top {
                sorted.len() + 1
            } else {
                sorted.iter().position(|&r| r == self.rank(x)).map_or(0, |i| i + 1)
            }
        }))
    }

    pub fn rank_selection(&self, s: &[usize]) -> Result<RankedPoset> {
        Ok(self.rank_selection_with_map(s)?.0)
    }

    /// A new minimum below `0̂`; it gets the last index, every rank shifts
    /// up by one.
    pub fn adjoin_bottom(&self) -> RankedPoset {
        let n = self.len();
        let mut ranks: Vec<usize> = self.ranks.iter().map(|r| r + 1).collect();
        ranks.push(0);
        let mut covers = self.covers();
        covers.push((n, self.bottom));
        RankedPoset::new(ranks, &covers).expect("adjoining a bottom keeps the poset valid")
    }
}

#[cfg(test)]
mod tests {
    use crate::ncpoly::AbPolynomial;
    use crate::poset::{ab_index, boolean_lattice, chain, AbIndexMethod};

    #[test]
    fn dual_reverses_ab_index() {
        let p = crate::poset::RankedPoset::new(vec![0, 1, 1, 2, 3], &[(0, 1), (0, 2), (1, 3), (3, 4), (2, 4)]).unwrap();
        let psi: AbPolynomial<i64> = ab_index(&p, AbIndexMethod::FlagH).unwrap();
        let dual: AbPolynomial<i64> = ab_index(&p.dual(), AbIndexMethod::FlagH).unwrap();
        assert_eq!(dual, psi.reverse());
    }

    #[test]
    fn adjoin_bottom_multiplies_by_a() {
        let p = boolean_lattice(2);
        let psi: AbPolynomial<i64> = ab_index(&p, AbIndexMethod::Recursion).unwrap();
        let adj: AbPolynomial<i64> = ab_index(&p.adjoin_bottom(), AbIndexMethod::Recursion).unwrap();
        assert_eq!(adj, &AbPolynomial::a() * &psi);
    }

    #[test]
    fn interval_and_selection() {
        let b3 = boolean_lattice(3);
        let i = b3.interval(1, 7).unwrap();
        assert_eq!(i.level_sizes(), vec![1, 2, 1]);
        let s = b3.rank_selection(&[2]).unwrap();
        assert_eq!(s.level_sizes(), vec![1, 3, 1]);
        assert!(b3.rank_selection(&[3]).is_err());
        assert!(chain(3).interval(2, 1).is_err());
    }
}
