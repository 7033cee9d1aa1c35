//! Seeded random graded posets for property tests.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::RankedPoset;

/// A graded poset of rank `1..=max_rank` with at most `max_width` elements
/// per middle rank. Every element of a middle rank covers at least one
/// element below and is covered by at least one above. The same seed always
/// gives the same poset.
pub fn random_graded(seed: u64, max_rank: usize, max_width: usize) -> RankedPoset {
    assert!(max_rank >= 1 && max_width >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = rng.random_range(1..=max_rank);
    let mut levels: Vec<Vec<usize>> = vec![vec![0]];
    let mut ranks = vec![0];
    for r in 1..rank {
        let width = rng.random_range(1..=max_width);
        let start = ranks.len();
        ranks.extend(std::iter::repeat_n(r, width));
        levels.push((start..start + width).collect());
    }
    ranks.push(rank);
    levels.push(vec![ranks.len() - 1]);

    let mut covers = Vec::new();
    for r in 1..=rank {
        let (below, here) = (&levels[r - 1], &levels[r]);
        let mut has_upper = vec![false; below.len()];
        for &y in here {
            let chosen: Vec<usize> = if r == 1 || r == rank {
                (0..below.len()).collect()
            } else {
                let k = rng.random_range(1..=below.len());
                let mut idx: Vec<usize> = (0..below.len()).collect();
                idx.sort_by_key(|_| rng.random::<u32>());
                idx.truncate(k);
                idx
            };
            for i in chosen {
                has_upper[i] = true;
                covers.push((below[i], y));
            }
        }
        for (i, covered) in has_upper.into_iter().enumerate() {
            if !covered {
                let &y = here.choose(&mut rng).expect("levels are nonempty");
                covers.push((below[i], y));
            }
        }
    }
    RankedPoset::new(ranks, &covers).expect("random graded poset is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_graded() {
        for seed in 0..50 {
            let p = random_graded(seed, 5, 3);
            assert_eq!(p, random_graded(seed, 5, 3));
            assert!(p.is_graded());
            assert!(p.poset_rank() <= 5);
        }
    }
}
