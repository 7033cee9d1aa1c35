//! The delete-one-letter coproduct on ab-polynomials.

use std::collections::btree_map::{self, BTreeMap};

use crate::scalar::Scalar;

use super::poly::AbPolynomial;
use super::word::{Ab, AbWord};

/// An element of the k-fold tensor power, as a combination of word tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor<T> {
    arity: usize,
    terms: BTreeMap<Vec<AbWord>, T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, factors: Vec<AbWord>, coeff: T) {
        debug_assert_eq!(factors.len(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
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

    pub fn add(&mut self, other: &Tensor<T>) {
        for (f, c) in &other.terms {
            self.add_term(f.clone(), c.clone());
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

    pub fn terms(&self) -> btree_map::Iter<'_, Vec<AbWord>, T> {
        self.terms.iter()
    }

    /// Tensor terms as tuples of polynomials; the coefficient is carried by
    /// the first factor.
    pub fn to_tuples(&self) -> Vec<Vec<AbPolynomial<T>>> {
        self.terms
            .iter()
            .map(|(factors, c)| {
                factors
                    .iter()
                    .enumerate()
                    .map(|(i, w)| {
                        let k = if i == 0 { c.clone() } else { T::one() };
                        AbPolynomial::monomial(w.clone(), k)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Tensor terms of `Δ(w)`, in order of the deleted position.
pub fn coproduct_word(w: &AbWord) -> Vec<(AbWord, AbWord)> {
    (0..w.len()).map(|i| (w.slice(0..i), w.slice(i + 1..w.len()))).collect()
}

/// `Δ(p)` as a list of tensor pairs.
///
/// ```
/// use arrangements::ncpoly::{coproduct, AbPolynomial};
/// let pairs = coproduct(&AbPolynomial::<i64>::from_pairs(&[("ab", 1)]));
/// let shown: Vec<String> = pairs.iter().map(|(u, v)| format!("({u}, {v})")).collect();
/// assert_eq!(shown, ["(1, b)", "(a, 1)"]);
/// ```
pub fn coproduct<T: Scalar>(p: &AbPolynomial<T>) -> Vec<(AbPolynomial<T>, AbPolynomial<T>)> {
    coproduct_tensor(p)
        .to_tuples()
        .into_iter()
        .map(|mut t| {
            let v = t.pop().expect("pair");
            let u = t.pop().expect("pair");
            (u, v)
        })
        .collect()
}

pub fn coproduct_tensor<T: Scalar>(p: &AbPolynomial<T>) -> Tensor<T> {
    kary_coproduct_tensor(p, 2)
}

/// `Δ^{k-1}(p)` with `k` tensor factors; `k = 1` is the identity.
///
/// Built as `(Δ^{k-2} ⊗ id) ∘ Δ`.
pub fn kary_coproduct_tensor<T: Scalar>(p: &AbPolynomial<T>, k: usize) -> Tensor<T> {
    assert!(k >= 1, "the k-ary coproduct needs k >= 1");
    let mut out = Tensor::zero(k);
    for (w, c) in p.terms() {
        for (factors, c2) in kary_word(w, k) {
            out.add_term(factors, c.clone() * T::from_int(c2));
        }
    }
    out
}

pub fn kary_coproduct<T: Scalar>(p: &AbPolynomial<T>, k: usize) -> Vec<Vec<AbPolynomial<T>>> {
    kary_coproduct_tensor(p, k).to_tuples()
}

fn kary_word(w: &AbWord, k: usize) -> Vec<(Vec<AbWord>, i64)> {
    if k == 1 {
        return vec![(vec![w.clone()], 1)];
    }
    let mut out = Vec::new();
    for (u, v) in coproduct_word(w) {
        for (mut factors, c) in kary_word(&u, k - 1) {
            factors.push(v.clone());
            out.push((factors, c));
        }
    }
    out
}

/// Applies a multilinear map to every tensor term and sums.
pub fn contract<T, F>(t: &Tensor<T>, mut f: F) -> AbPolynomial<T>
where
    T: Scalar,
    F: FnMut(&[AbWord]) -> AbPolynomial<T>,
{
    let mut out = AbPolynomial::zero();
    for (factors, c) in t.terms() {
        out += &f(factors).scale(c);
    }
    out
}

/// Splits `w` at the given increasing positions, dropping the letters there.
pub fn delete_positions(w: &AbWord, positions: &[usize]) -> Vec<AbWord> {
    let letters: &[Ab] = w.letters();
    let mut out = Vec::with_capacity(positions.len() + 1);
    let mut start = 0;
    for &p in positions {
        out.push(AbWord::new(letters[start..p].to_vec()));
        start = p + 1;
    }
    out.push(AbWord::new(letters[start..].to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = AbPolynomial<i64>;

    fn show(t: &Tensor<i64>) -> Vec<String> {
        t.terms()
            .map(|(f, c)| {
                let parts: Vec<String> = f.iter().map(|w| w.to_string()).collect();
                format!("{c}({})", parts.join(","))
            })
            .collect()
    }

    #[test]
    fn single_letters() {
        assert_eq!(show(&coproduct_tensor(&P::a())), ["1(1,1)"]);
        assert_eq!(show(&coproduct_tensor(&P::b())), ["1(1,1)"]);
        assert!(coproduct_tensor(&P::one()).is_zero());
    }

    #[test]
    fn aba_pairs() {
        let p = P::from_pairs(&[("aba", 1)]);
        assert_eq!(show(&coproduct_tensor(&p)), ["1(1,ba)", "1(a,a)", "1(ab,1)"]);
        assert_eq!(show(&kary_coproduct_tensor(&p, 3)), ["1(1,1,a)", "1(1,b,1)", "1(a,1,1)"]);
    }

    #[test]
    fn identity_case() {
        let p = P::from_pairs(&[("ab", 2), ("b", 1)]);
        let t = kary_coproduct(&p, 1);
        assert_eq!(t.len(), 2);
        assert_eq!(&t[0][0] + &t[1][0], p);
    }
}
