//! Univariate polynomials in `t` (characteristic and chromatic polynomials).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Dense polynomial; `coeffs[k]` is the coefficient of `t^k`. Trailing
/// zeros are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct UniPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPolynomial<T> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// `coeff * t^degree`
    pub fn monomial(coeff: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::from_coeffs(coeffs)
    }

    /// The linear polynomial `t - root`.
    pub fn linear_factor(root: T) -> Self {
        Self::from_coeffs(vec![-root, T::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add_term(&mut self, coeff: T, degree: usize) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, T::zero());
        }
        self.coeffs[degree] = self.coeffs[degree].clone() + coeff;
        self.trim();
    }

    pub fn eval(&self, t: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// Exact division by `t`; `None` when the constant term is nonzero.
    pub fn div_by_t(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c) if c.is_zero() => Some(Self::from_coeffs(self.coeffs[1..].to_vec())),
            Some(_) => None,
        }
    }
}

impl<T: Scalar> Add for &UniPolynomial<T> {
    type Output = UniPolynomial<T>;
    fn add(self, rhs: Self) -> UniPolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &UniPolynomial<T> {
    type Output = UniPolynomial<T>;
    fn sub(self, rhs: Self) -> UniPolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Neg for &UniPolynomial<T> {
    type Output = UniPolynomial<T>;
    fn neg(self) -> UniPolynomial<T> {
        UniPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Mul for &UniPolynomial<T> {
    type Output = UniPolynomial<T>;
    fn mul(self, rhs: Self) -> UniPolynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPolynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPolynomial::from_coeffs(out)
    }
}

impl<T: Scalar> fmt::Display for UniPolynomial<T> {
    /// Highest degree first, e.g. `t^2 - 3t + 8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = UniPolynomial<i64>;

    #[test]
    fn display_matches_conventional_form() {
        assert_eq!(P::from_coeffs(vec![8, -3, 1]).to_string(), "t^2 - 3t + 8");
        assert_eq!(P::from_coeffs(vec![-8, 12, -6, 1]).to_string(), "t^3 - 6t^2 + 12t - 8");
        assert_eq!(P::from_coeffs(vec![0, -1, 1]).to_string(), "t^2 - t");
        assert_eq!(P::from_coeffs(vec![-1]).to_string(), "-1");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn cube_of_linear_factor() {
        let f = P::linear_factor(2);
        let cube = &(&f * &f) * &f;
        assert_eq!(cube.coeffs(), &[-8, 12, -6, 1]);
        assert_eq!(cube.eval(&-1), -27);
        assert_eq!(cube.eval(&1), -1);
    }

    #[test]
    fn division_by_t() {
        let p = P::from_coeffs(vec![0, 2, -3, 1]);
        assert_eq!(p.div_by_t().unwrap().coeffs(), &[2, -3, 1]);
        assert!(P::from_coeffs(vec![1, 1]).div_by_t().is_none());
    }
}
