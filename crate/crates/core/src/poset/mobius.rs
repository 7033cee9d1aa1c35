use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::scalar::sign_pow;

use super::RankedPoset;

/// The four signed Möbius sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Zaslavsky {
    /// `Σ_x (-1)^ρ(x) μ(0̂, x)` over all `x`
    Z,
    /// `(-1)^ρ(P) μ(0̂, 1̂)`
    Zb,
    /// `Σ (-1)^ρ(x) μ(0̂, x)` over the elements covered by `1̂`
    Zt,
    /// `Z - 2 Z_b`
    Zub,
}

impl RankedPoset {
    /// `μ(x, ·)`, zero off the up-set of `x`. Computed once per row.
    pub fn mobius_row(&self, x: usize) -> &[i64] {
        self.mobius_rows[x].get_or_init(|| {
            let mut row = vec![0i64; self.len()];
            let upset: Vec<usize> = self.up_set(x).collect();
            for (i, &y) in upset.iter().enumerate() {
                row[y] = if y == x {
                    1
                } else {
                    -upset[..i].iter().filter(|&&z| self.leq(z, y)).map(|&z| row[z]).sum::<i64>()
                };
            }
            row
        })
    }

    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        self.check_pair(x, y)?;
        Ok(self.mobius_row(x)[y])
    }

    /// `μ(0̂, 1̂)`
    pub fn mobius_poset(&self) -> i64 {
        self.mobius_row(self.bottom)[self.top]
    }

    pub fn zaslavsky(&self, kind: Zaslavsky) -> i64 {
        let row = self.mobius_row(self.bottom);
        let signed = |x: usize| sign_pow::<i64>(self.rank(x)) * row[x];
        match kind {
            Zaslavsky::Z => (0..self.len()).map(signed).sum(),
            Zaslavsky::Zb => signed(self.top),
            Zaslavsky::Zt => self.coatoms().into_iter().map(signed).sum(),
            Zaslavsky::Zub => self.zaslavsky(Zaslavsky::Z) - 2 * self.zaslavsky(Zaslavsky::Zb),
        }
    }

    /// `μ(x, y) = (-1)^{ρ(y) - ρ(x)}` on every interval.
    pub fn is_eulerian(&self) -> bool {
        (0..self.len()).all(|x| {
            let row = self.mobius_row(x);
            self.up_set(x).all(|y| row[y] == sign_pow::<i64>(self.rank(y) - self.rank(x)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::poset::{boolean_lattice, butterfly, chain};

    #[test]
    fn chains() {
        let c = chain(2);
        assert_eq!(c.mobius(0, 0), Ok(1));
        assert_eq!(c.mobius_poset(), 0);
        assert!(!c.is_eulerian());
        let c1 = chain(1);
        assert_eq!(c1.zaslavsky(Zaslavsky::Z), 2);
        assert_eq!(c1.zaslavsky(Zaslavsky::Zb), 1);
        assert_eq!(c.mobius(2, 0), Err(Error::IncomparablePair(2, 0)));
    }

    #[test]
    fn eulerian_families() {
        assert!(boolean_lattice(3).is_eulerian());
        assert!(butterfly(4).is_eulerian());
        assert_eq!(boolean_lattice(3).mobius_poset(), -1);
    }
}
