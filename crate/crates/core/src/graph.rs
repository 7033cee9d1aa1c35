//! Graphical arrangements `x_i = x_j` on the torus, with brute-force
//! orientation counts as an independent oracle.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperplane::Hyperplane;
use crate::scalar::{sign_pow, IntScalar, Scalar};
use crate::torus::{build_poset, TorusArrangement};
use crate::unipoly::UniPolynomial;

/// Largest edge count the orientation enumeration accepts.
pub const MAX_ORIENTATION_EDGES: usize = 20;

/// Simple graph on the vertices `1..=n`. Edges are stored as `(i, j)` with
/// `i < j`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(i, j) in edges {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidInput(format!("edge {i}{j} leaves the vertex set 1..{n}")));
            }
            if i == j {
                return Err(Error::InvalidInput(format!("loop at vertex {i}")));
            }
            if !set.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidInput(format!("edge {i}{j} is listed twice")));
            }
        }
        Ok(Self { n, edges: set.into_iter().collect() })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Self { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Self { n, edges: (1..n).map(|i| (i, i + 1)).collect() }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs three vertices");
        let mut g = Self::path(n);
        g.edges.push((1, n));
        g.edges.sort_unstable();
        g
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for s in 1..=self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The induced subgraph on `vertices`, relabeled `1..` in order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let pos = |v: usize| vertices.iter().position(|&w| w == v).map(|p| p + 1);
        let edges = self.edges.iter().filter_map(|&(i, j)| Some((pos(i)?, pos(j)?))).collect::<Vec<_>>();
        Self::new(vertices.len(), &edges).expect("induced subgraph is simple")
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(i, j)| format!("{i}{j}")).collect();
        write!(f, "G(n = {}; {})", self.n, edges.join(" "))
    }
}

/// Chromatic polynomial by deletion and contraction, memoized on the
/// sorted edge list.
pub fn chromatic_poly<T: Scalar>(g: &SimpleGraph) -> UniPolynomial<T> {
    let mut memo = HashMap::new();
    chromatic_rec(g.n, g.edges.clone(), &mut memo)
}

type Memo<T> = HashMap<(usize, Vec<(usize, usize)>), UniPolynomial<T>>;

fn chromatic_rec<T: Scalar>(n: usize, edges: Vec<(usize, usize)>, memo: &mut Memo<T>) -> UniPolynomial<T> {
    let Some(&(u, v)) = edges.last() else {
        return UniPolynomial::monomial(T::one(), n);
    };
    let key = (n, edges);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (n, edges) = key;
    let deleted = edges[..edges.len() - 1].to_vec();
    // merge v into u, then close the gap left by v
    let relabel = |x: usize| match x.cmp(&v) {
        std::cmp::Ordering::Equal => u,
        std::cmp::Ordering::Greater => x - 1,
        std::cmp::Ordering::Less => x,
    };
    let contracted: BTreeSet<(usize, usize)> =
        deleted.iter().map(|&(i, j)| (relabel(i), relabel(j))).map(|(i, j)| (i.min(j), i.max(j))).collect();
    let p = &chromatic_rec(n, deleted, memo) - &chromatic_rec(n - 1, contracted.into_iter().collect(), memo);
    memo.insert((n, edges), p.clone());
    p
}

/// Hyperplanes `x_i - x_j ≡ 0` for every edge `ij`; `augmented` adds
/// `x_1 ≡ 0`. For the augmented arrangement the identity
/// `χ(H', t) = (t - 1)·χ_G(t)/t` is checked against the intersection poset.
pub fn graphical_arrangement<I: IntScalar>(g: &SimpleGraph, augmented: bool) -> Result<TorusArrangement<I>> {
    let n = g.n;
    let mut hs = Vec::new();
    for &(i, j) in &g.edges {
        let mut normal = vec![I::zero(); n];
        normal[i - 1] = I::one();
        normal[j - 1] = -I::one();
        hs.push(Hyperplane::toric(normal, Ratio::from_integer(I::zero()))?);
    }
    if augmented {
        if n == 0 {
            return Err(Error::InvalidInput("the augmented arrangement needs a vertex".into()));
        }
        let mut normal = vec![I::zero(); n];
        normal[0] = I::one();
        hs.push(Hyperplane::toric(normal, Ratio::from_integer(I::zero()))?);
    }
    let a = TorusArrangement::new(n, hs)?;
    if augmented {
        let chi_g = chromatic_poly::<i64>(g);
        let expected = &UniPolynomial::linear_factor(1) * &chi_g.div_by_t().expect("χ_G(0) = 0 with a vertex");
        let chi = build_poset(&a)?.char_poly();
        if chi != expected {
            return Err(Error::ConsistencyFailure(format!(
                "augmented arrangement of {g}: χ(H') = {chi}, (t - 1)·χ_G/t = {expected}"
            )));
        }
    }
    Ok(a)
}

/// Acyclic orientations in total and, per vertex `v`, those whose only
/// sink is `v`. Bit `e` of an orientation mask set means edge `(i, j)` is
/// oriented `j → i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationCounts {
    pub total: u64,
    /// Entry `v - 1` counts orientations with unique sink `v`.
    pub unique_sink: Vec<u64>,
}

pub fn orientation_counts(g: &SimpleGraph) -> Result<OrientationCounts> {
    let m = g.edges.len();
    if m > MAX_ORIENTATION_EDGES {
        return Err(Error::TooManyEdges { edges: m, max: MAX_ORIENTATION_EDGES });
    }
    let mut total = 0;
    let mut unique_sink = vec![0; g.n];
    let mut out = vec![Vec::new(); g.n];
    let mut outdeg = vec![0usize; g.n];
    for mask in 0u32..(1u32 << m) {
        out.iter_mut().for_each(Vec::clear);
        outdeg.iter_mut().for_each(|d| *d = 0);
        for (e, &(i, j)) in g.edges.iter().enumerate() {
            let (s, t) = if mask >> e & 1 == 0 { (i - 1, j - 1) } else { (j - 1, i - 1) };
            out[s].push(t);
            outdeg[s] += 1;
        }
        if !is_acyclic(&out) {
            continue;
        }
        total += 1;
        let mut sinks = (0..g.n).filter(|&v| outdeg[v] == 0);
        if let (Some(v), None) = (sinks.next(), sinks.next()) {
            unique_sink[v] += 1;
        }
    }
    Ok(OrientationCounts { total, unique_sink })
}

fn is_acyclic(out: &[Vec<usize>]) -> bool {
    let mut indeg = vec![0usize; out.len()];
    out.iter().flatten().for_each(|&t| indeg[t] += 1);
    let mut stack: Vec<usize> = (0..out.len()).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = stack.pop() {
        removed += 1;
        for &t in &out[v] {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                stack.push(t);
            }
        }
    }
    removed == out.len()
}

/// Acyclic orientations whose only sink is `v`, by enumerating all
/// `2^|E|` orientations.
pub fn count_acyclic_unique_sink(g: &SimpleGraph, v: usize) -> Result<u64> {
    if v == 0 || v > g.n {
        return Err(Error::InvalidInput(format!("vertex {v} is not in 1..{}", g.n)));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(orientation_counts(g)?.unique_sink[v - 1])
}

pub fn count_acyclic_orientations(g: &SimpleGraph) -> Result<u64> {
    Ok(orientation_counts(g)?.total)
}

/// Regions of the graphical arrangement on `Tⁿ`: `(-1)^{n-k}` times the
/// coefficient of `t^k` in `χ_G`, where `k` counts components.
///
/// Connected graphs are cross-checked against the unique-sink count at every
/// vertex and the region count of the augmented arrangement; disconnected
/// ones against the product over components.
pub fn graphical_region_count(g: &SimpleGraph) -> Result<i64> {
    let comps = g.components();
    let k = comps.len();
    let chi = chromatic_poly::<i64>(g);
    let count = sign_pow::<i64>(g.n - k) * chi.coeff(k);
    if k > 1 {
        let product = comps.iter().map(|c| graphical_region_count(&g.induced(c))).product::<Result<i64>>()?;
        if product != count {
            return Err(Error::ConsistencyFailure(format!(
                "{g}: coefficient gives {count} regions, components give {product}"
            )));
        }
        return Ok(count);
    }
    let sinks = orientation_counts(g)?.unique_sink;
    if let Some(v) = sinks.iter().position(|&s| s as i64 != count) {
        return Err(Error::ConsistencyFailure(format!(
            "{g}: coefficient gives {count} regions, {} orientations have unique sink {}",
            sinks[v],
            v + 1
        )));
    }
    let toric = build_poset(&graphical_arrangement::<i64>(g, true)?)?.region_count()?;
    if toric != count {
        return Err(Error::ConsistencyFailure(format!(
            "{g}: coefficient gives {count} regions, the augmented arrangement has {toric}"
        )));
    }
    Ok(count)
}
