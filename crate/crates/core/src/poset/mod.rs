//! Finite ranked posets with a unique bottom and top.

mod ab_index;
mod families;
mod flag;
mod json;
mod mobius;
mod random;
mod structural;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use ab_index::{ab_index, AbIndexMethod};
pub use families::{boolean_lattice, butterfly, chain, polygon};
pub use flag::{flag_vectors, philip_hall_check, FlagVector};
pub use json::PosetJson;
pub use mobius::Zaslavsky;
pub use random::random_graded;

/// Rows of a square boolean matrix packed into machine words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self { n, words, bits: vec![0; n * words] }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    /// `row[i] |= row[j]`
    fn or_row(&mut self, i: usize, j: usize) {
        for w in 0..self.words {
            let v = self.bits[j * self.words + w];
            self.bits[i * self.words + w] |= v;
        }
    }

    fn row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.get(i, j))
    }
}

/// A finite poset with a unique minimum `0̂` of rank 0, a unique maximum
/// `1̂`, and an integer rank that strictly increases along the order.
///
/// Gradedness is not assumed: ranks are taken literally, so covers may
/// skip ranks.
#[derive(Clone)]
pub struct RankedPoset {
    ranks: Vec<usize>,
    /// `leq.get(x, y)` iff `x <= y`
    leq: BitMatrix,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    /// Elements sorted by rank, a linear extension.
    order: Vec<usize>,
    bottom: usize,
    top: usize,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
}

impl RankedPoset {
    /// Builds a poset from element ranks and any generating set of strict
    /// relations `x < y`; the order is their transitive closure.
    pub fn new(ranks: Vec<usize>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = ranks.len();
        if n == 0 {
            return Err(Error::InvalidPoset("no elements".into()));
        }
        for &(x, y) in relations {
            if x >= n || y >= n {
                return Err(Error::InvalidPoset(format!("relation ({x}, {y}) out of range")));
            }
            if ranks[x] >= ranks[y] {
                return Err(Error::InvalidPoset(format!(
                    "relation {x} < {y} does not increase rank ({} vs {})",
                    ranks[x], ranks[y]
                )));
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (ranks[x], x));

        // Rank strictly increases along relations, so processing elements by
        // decreasing rank closes the relation transitively in one sweep.
        let mut direct = vec![Vec::new(); n];
        for &(x, y) in relations {
            direct[x].push(y);
        }
        let mut leq = BitMatrix::new(n);
        for &x in order.iter().rev() {
            leq.set(x, x);
            for &y in &direct[x] {
                leq.or_row(x, y);
            }
        }

        let minima: Vec<usize> = (0..n).filter(|&y| (0..n).all(|x| !leq.get(x, y) || x == y)).collect();
        let maxima: Vec<usize> = (0..n).filter(|&x| leq.row(x).all(|y| y == x)).collect();
        let (bottom, top) = match (minima.as_slice(), maxima.as_slice()) {
            ([b], [t]) => (*b, *t),
            _ => {
                return Err(Error::InvalidPoset(format!(
                    "expected a unique minimum and maximum, found minima {minima:?} and maxima {maxima:?}"
                )))
            }
        };
        if ranks[bottom] != 0 {
            return Err(Error::InvalidPoset(format!("bottom {bottom} has rank {}", ranks[bottom])));
        }

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for x in 0..n {
            // In rank order, y covers x iff no cover found so far lies below y.
            for &y in &order {
                if y != x && leq.get(x, y) && !up[x].iter().any(|&z: &usize| leq.get(z, y)) {
                    up[x].push(y);
                    down[y].push(x);
                }
            }
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Self { ranks, leq, up, down, order, bottom, top, mobius_rows: (0..n).map(|_| OnceLock::new()).collect() })
    }

    /// Builds from a list of cover pairs `(x, y)` with `x ⋖ y`.
    pub fn from_covers(ranks: Vec<usize>, covers: &[(usize, usize)]) -> Result<Self> {
        Self::new(ranks, covers)
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank of the poset, `ρ(1̂)`.
    pub fn poset_rank(&self) -> usize {
        self.ranks[self.top]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.get(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq.get(x, y)
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// All cover pairs, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            (0..self.len()).flat_map(|x| self.up[x].iter().map(move |&y| (x, y))).collect();
        out.sort_unstable();
        out
    }

    /// Elements in a rank-increasing linear extension.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    /// Elements `z` with `x <= z`, in rank order.
    pub fn up_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().copied().filter(move |&z| self.leq(x, z))
    }

    pub fn elements_of_rank(&self, r: usize) -> Vec<usize> {
        self.order.iter().copied().filter(|&x| self.ranks[x] == r).collect()
    }

    /// Number of elements at each rank `0..=ρ(1̂)`.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.poset_rank() + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.up[self.bottom].clone()
    }

    /// Elements covered by the top.
    pub fn coatoms(&self) -> Vec<usize> {
        self.down[self.top].clone()
    }

    /// Whether every maximal chain has length `ρ(1̂)`.
    pub fn is_graded(&self) -> bool {
        (0..self.len()).all(|x| self.up[x].iter().all(|&y| self.ranks[y] == self.ranks[x] + 1))
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<()> {
        if x >= self.len() || y >= self.len() || !self.leq(x, y) {
            return Err(Error::IncomparablePair(x, y));
        }
        Ok(())
    }
}

impl PartialEq for RankedPoset {
    fn eq(&self, other: &Self) -> bool {
        self.ranks == other.ranks && self.leq == other.leq
    }
}

impl Eq for RankedPoset {}

impl fmt::Debug for RankedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RankedPoset").field("ranks", &self.ranks).field("covers", &self.covers()).finish()
    }
}
