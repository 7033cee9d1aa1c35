//! Small named posets.

use super::RankedPoset;

/// The chain `0 < 1 < ⋯ < k` of rank `k`.
pub fn chain(k: usize) -> RankedPoset {
    let covers: Vec<(usize, usize)> = (0..k).map(|i| (i, i + 1)).collect();
    RankedPoset::new((0..=k).collect(), &covers).expect("chain is a valid poset")
}

/// Subsets of `{1..n}` ordered by inclusion; element `s` is the bitmask.
pub fn boolean_lattice(n: usize) -> RankedPoset {
    let size = 1usize << n;
    let ranks = (0..size).map(|s| s.count_ones() as usize).collect();
    let covers: Vec<(usize, usize)> =
        (0..size).flat_map(|s| (0..n).filter(move |i| s >> i & 1 == 0).map(move |i| (s, s | 1 << i))).collect();
    RankedPoset::new(ranks, &covers).expect("boolean lattice is a valid poset")
}

/// Rank `k`: two elements at each rank `1..k-1`, each covering both
/// elements below it, plus `0̂` and `1̂`.
pub fn butterfly(k: usize) -> RankedPoset {
    assert!(k >= 1, "butterfly rank must be positive");
    // element 0 is the bottom, 2i-1 and 2i sit at rank i, the last is the top
    let top = 2 * (k - 1) + 1;
    let mut ranks = vec![0];
    for i in 1..k {
        ranks.extend([i, i]);
    }
    ranks.push(k);
    let level = |i: usize| -> Vec<usize> {
        match i {
            0 => vec![0],
            i if i == k => vec![top],
            i => vec![2 * i - 1, 2 * i],
        }
    };
    let covers: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| {
            let upper = level(i + 1);
            level(i).into_iter().flat_map(move |x| upper.clone().into_iter().map(move |y| (x, y)))
        })
        .collect();
    RankedPoset::new(ranks, &covers).expect("butterfly is a valid poset")
}

/// Face lattice of an `m`-gon (the boundary circle cut into `m` arcs):
/// `0̂`, vertices `1..=m`, edges `m+1..=2m`, and `1̂`. Edge `i` joins
/// vertices `i` and `i+1 mod m`. For `m = 2` the two edges share both
/// vertices.
pub fn polygon(m: usize) -> RankedPoset {
    assert!(m >= 2, "a polygon needs at least two vertices");
    let top = 2 * m + 1;
    let mut ranks = vec![0];
    ranks.extend(std::iter::repeat_n(1, m));
    ranks.extend(std::iter::repeat_n(2, m));
    ranks.push(3);
    let mut covers = Vec::new();
    for i in 0..m {
        covers.push((0, 1 + i));
        covers.push((1 + i, m + 1 + i));
        covers.push((1 + (i + 1) % m, m + 1 + i));
        covers.push((m + 1 + i, top));
    }
    covers.sort_unstable();
    covers.dedup();
    RankedPoset::new(ranks, &covers).expect("polygon is a valid poset")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(chain(3).level_sizes(), vec![1, 1, 1, 1]);
        assert_eq!(boolean_lattice(3).level_sizes(), vec![1, 3, 3, 1]);
        assert_eq!(butterfly(4).level_sizes(), vec![1, 2, 2, 2, 1]);
        assert_eq!(polygon(4).level_sizes(), vec![1, 4, 4, 1]);
        assert_eq!(polygon(2).covers().len(), 2 + 4 + 2);
    }
}
