use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::latbase::frac;
use crate::scalar::IntScalar;

/// `normal · x = offset`, with a primitive integer normal whose first
/// nonzero entry is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane<I: IntScalar> {
    normal: Vec<I>,
    offset: Ratio<I>,
}

impl<I: IntScalar> Hyperplane<I> {
    /// Scales `normal · x = offset` to the normalized form.
    pub fn new(normal: Vec<I>, offset: Ratio<I>) -> Result<Self> {
        let g = normal.iter().fold(I::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return Err(Error::InvalidInput("hyperplane normal is zero".into()));
        }
        let lead = normal.iter().find(|x| !x.is_zero()).expect("nonzero normal");
        let g = if lead.is_negative() { -g } else { g };
        let normal = normal.into_iter().map(|x| x / g.clone()).collect();
        Ok(Self { normal, offset: offset / Ratio::from_integer(g) })
    }

    /// Same, then reduces the offset mod 1 (a toric hyperplane).
    pub fn toric(normal: Vec<I>, offset: Ratio<I>) -> Result<Self> {
        let h = Self::new(normal, offset)?;
        Ok(Self { offset: frac(&h.offset), ..h })
    }

    pub fn from_i64(normal: &[i64], num: i64, den: i64) -> Result<Self> {
        Self::new(normal.iter().map(|&x| I::from_int(x)).collect(), Ratio::new(I::from_int(num), I::from_int(den)))
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[I] {
        &self.normal
    }

    pub fn offset(&self) -> &Ratio<I> {
        &self.offset
    }
}

impl<I: IntScalar> fmt::Display for Hyperplane<I> {
    /// `x1 - 2*x2 = 1/3`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.normal.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => write!(f, "-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let m = c.abs();
            if m.is_one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "{m}*x{}", i + 1)?;
            }
        }
        write!(f, " = {}", self.offset)
    }
}

impl<I: IntScalar> fmt::Debug for Hyperplane<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hyperplane({self})")
    }
}

/// Rejects mismatched dimensions and repeated hyperplanes.
pub(crate) fn check_distinct<I: IntScalar>(n: usize, hs: &[Hyperplane<I>]) -> Result<()> {
    for (i, h) in hs.iter().enumerate() {
        if h.dim() != n {
            return Err(Error::AmbientMismatch(n, h.dim()));
        }
        if hs[..i].contains(h) {
            return Err(Error::InvalidInput(format!("hyperplane `{h}` is listed twice")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let h = Hyperplane::<i64>::from_i64(&[0, -2, 4], 3, 1).unwrap();
        assert_eq!(h.normal(), &[0, 1, -2]);
        assert_eq!(h.offset(), &Ratio::new(-3, 2));
        assert_eq!(h.to_string(), "x2 - 2*x3 = -3/2");
        let t = Hyperplane::toric(vec![0i64, -2, 4], Ratio::from_integer(3)).unwrap();
        assert_eq!(t.offset(), &Ratio::new(1, 2));
        assert!(Hyperplane::<i64>::from_i64(&[0, 0], 1, 1).is_err());
    }
}
