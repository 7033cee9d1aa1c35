use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::word::{Ab, Cd, Letter, Word};

/// A noncommutative polynomial: a finite linear combination of words with
/// nonzero coefficients, stored in canonical word order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcPoly<L: Letter, T> {
    terms: BTreeMap<Word<L>, T>,
}

pub type AbPolynomial<T> = NcPoly<Ab, T>;
pub type CdPolynomial<T> = NcPoly<Cd, T>;

impl<L: Letter, T: Scalar> Default for NcPoly<L, T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<L: Letter, T: Scalar> NcPoly<L, T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), T::one())
    }

    pub fn letter(l: L) -> Self {
        Self::monomial(Word::new(vec![l]), T::one())
    }

    pub fn monomial(word: Word<L>, coeff: T) -> Self {
        let mut p = Self::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Word<L>, T)>,
    {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Builds from `(word text, coefficient)` pairs, e.g. `[("ab", 2)]`.
    ///
    /// Panics on an unparsable word; intended for literals.
    pub fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|(w, c)| {
            let word = Word::parse(w).unwrap_or_else(|| panic!("bad word literal `{w}`"));
            (word, T::from_int(*c))
        }))
    }

    pub fn add_term(&mut self, word: Word<L>, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Word<L>, T> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word<L>) -> T {
        self.terms.get(word).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficient of the word spelled by `text`.
    pub fn coeff_of(&self, text: &str) -> T {
        Word::parse(text).map(|w| self.coeff(&w)).unwrap_or_else(T::zero)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c.clone() * k.clone())))
    }

    /// Applies a linear map given on words.
    pub fn map_linear<M, F>(&self, mut f: F) -> NcPoly<M, T>
    where
        M: Letter,
        F: FnMut(&Word<L>) -> NcPoly<M, T>,
    {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            for (w2, c2) in f(w).terms {
                out.add_term(w2, c.clone() * c2);
            }
        }
        out
    }

    /// The common degree of all terms, `None` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let mut degrees = self.terms.keys().map(|w| w.degree());
        match degrees.next() {
            None => Ok(None),
            Some(d) if degrees.all(|e| e == d) => Ok(Some(d)),
            Some(_) => Err(Error::NotHomogeneous),
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.degree()).max()
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Linear involution reversing every word.
    pub fn reverse(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.reversed(), c.clone())))
    }

    /// Changes the coefficient ring.
    pub fn map_coeffs<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> NcPoly<L, U> {
        NcPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }
}

impl<T: Scalar> AbPolynomial<T> {
    pub fn a() -> Self {
        Self::letter(Ab::A)
    }

    pub fn b() -> Self {
        Self::letter(Ab::B)
    }

    /// `a - b`
    pub fn a_minus_b() -> Self {
        &Self::a() - &Self::b()
    }

    /// `(a - b)^k`
    pub fn a_minus_b_pow(k: usize) -> Self {
        Self::a_minus_b().pow(k)
    }
}

impl<T: Scalar> CdPolynomial<T> {
    pub fn c() -> Self {
        Self::letter(Cd::C)
    }

    pub fn d() -> Self {
        Self::letter(Cd::D)
    }

    /// Substitutes `c = a + b` and `d = ab + ba`.
    pub fn to_ab(&self) -> AbPolynomial<T> {
        let c = &AbPolynomial::<T>::a() + &AbPolynomial::b();
        let d = AbPolynomial::from_pairs(&[("ab", 1), ("ba", 1)]);
        self.map_linear(|w| {
            w.letters().iter().fold(AbPolynomial::one(), |acc, l| match l {
                Cd::C => &acc * &c,
                Cd::D => &acc * &d,
            })
        })
    }
}

impl<L: Letter, T: Scalar> Add for &NcPoly<L, T> {
    type Output = NcPoly<L, T>;
    fn add(self, rhs: Self) -> NcPoly<L, T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<L: Letter, T: Scalar> Sub for &NcPoly<L, T> {
    type Output = NcPoly<L, T>;
    fn sub(self, rhs: Self) -> NcPoly<L, T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<L: Letter, T: Scalar> Add for NcPoly<L, T> {
    type Output = NcPoly<L, T>;
    fn add(mut self, rhs: Self) -> NcPoly<L, T> {
        self += &rhs;
        self
    }
}

impl<L: Letter, T: Scalar> Sub for NcPoly<L, T> {
    type Output = NcPoly<L, T>;
    fn sub(mut self, rhs: Self) -> NcPoly<L, T> {
        self -= &rhs;
        self
    }
}

impl<L: Letter, T: Scalar> AddAssign<&NcPoly<L, T>> for NcPoly<L, T> {
    fn add_assign(&mut self, rhs: &NcPoly<L, T>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<L: Letter, T: Scalar> SubAssign<&NcPoly<L, T>> for NcPoly<L, T> {
    fn sub_assign(&mut self, rhs: &NcPoly<L, T>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

impl<L: Letter, T: Scalar> Neg for &NcPoly<L, T> {
    type Output = NcPoly<L, T>;
    fn neg(self) -> NcPoly<L, T> {
        self.scale(&-T::one())
    }
}

impl<L: Letter, T: Scalar> Mul for &NcPoly<L, T> {
    type Output = NcPoly<L, T>;
    fn mul(self, rhs: Self) -> NcPoly<L, T> {
        let mut out = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a.clone() * b.clone());
            }
        }
        out
    }
}

impl<L: Letter, T: Scalar> Mul for NcPoly<L, T> {
    type Output = NcPoly<L, T>;
    fn mul(self, rhs: Self) -> NcPoly<L, T> {
        &self * &rhs
    }
}

impl<L: Letter, T: Scalar> fmt::Display for NcPoly<L, T> {
    /// Canonical text form, e.g. `c^3 + 22*dc + 24*cd`; see [`super::text`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{magnitude}*{w}")?;
            }
        }
        Ok(())
    }
}

impl<L: Letter, T: Scalar> fmt::Debug for NcPoly<L, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({self})")
    }
}
