//! Linear operators on ab-polynomials.

use crate::scalar::Scalar;

use super::poly::{AbPolynomial, CdPolynomial};
use super::word::{Ab, AbWord, Cd, CdWord};

/// The ω map: every `ab` becomes `2d`, every other letter becomes `c`.
///
/// An occurrence of `ab` starts with `a` and ends with `b`, so two
/// occurrences can never share a letter and the left-to-right scan is
/// unambiguous.
pub fn omega<T: Scalar>(p: &AbPolynomial<T>) -> CdPolynomial<T> {
    p.map_linear(|w| {
        let (word, twos) = omega_word(w);
        let coeff = (0..twos).fold(T::one(), |acc, _| acc * T::from_int(2));
        CdPolynomial::monomial(word, coeff)
    })
}

/// The cd-word of ω(w) and the number of `ab` occurrences in `w`.
pub fn omega_word(w: &AbWord) -> (CdWord, usize) {
    let letters = w.letters();
    let mut out = Vec::with_capacity(letters.len());
    let mut twos = 0;
    let mut i = 0;
    while i < letters.len() {
        if letters[i] == Ab::A && letters.get(i + 1) == Some(&Ab::B) {
            out.push(Cd::D);
            twos += 1;
            i += 2;
        } else {
            out.push(Cd::C);
            i += 1;
        }
    }
    (CdWord::new(out), twos)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterMap {
    /// `a^m ↦ (a-b)^m`
    Kappa,
    /// `b^m ↦ (a-b)^m`
    Beta,
    /// `b^m a^k ↦ 2(a-b)^{m+k}`
    Eta,
    /// `b^m ↦ (a-b)^m`, `b^m a ↦ (a-b)^{m+1}`
    LambdaT,
    /// `η - 2β`
    LambdaUb,
}

/// Multiplier of `(a-b)^{|w|}` in the image of the word `w`.
fn letter_map_factor(kind: LetterMap, w: &AbWord) -> i64 {
    let letters = w.letters();
    let leading_bs = letters.iter().take_while(|&&l| l == Ab::B).count();
    let rest = &letters[leading_bs..];
    let all_a = |s: &[Ab]| s.iter().all(|&l| l == Ab::A);
    match kind {
        LetterMap::Kappa => i64::from(all_a(letters)),
        LetterMap::Beta => i64::from(rest.is_empty()),
        LetterMap::Eta => 2 * i64::from(all_a(rest)),
        LetterMap::LambdaT => i64::from(rest.is_empty() || rest == [Ab::A]),
        LetterMap::LambdaUb => letter_map_factor(LetterMap::Eta, w) - 2 * letter_map_factor(LetterMap::Beta, w),
    }
}

pub fn letter_map<T: Scalar>(kind: LetterMap, p: &AbPolynomial<T>) -> AbPolynomial<T> {
    p.map_linear(|w| match letter_map_factor(kind, w) {
        0 => AbPolynomial::zero(),
        k => AbPolynomial::a_minus_b_pow(w.len()).scale(&T::from_int(k)),
    })
}

pub fn kappa<T: Scalar>(p: &AbPolynomial<T>) -> AbPolynomial<T> {
    letter_map(LetterMap::Kappa, p)
}

pub fn beta<T: Scalar>(p: &AbPolynomial<T>) -> AbPolynomial<T> {
    letter_map(LetterMap::Beta, p)
}

pub fn eta<T: Scalar>(p: &AbPolynomial<T>) -> AbPolynomial<T> {
    letter_map(LetterMap::Eta, p)
}

pub fn lambda_t<T: Scalar>(p: &AbPolynomial<T>) -> AbPolynomial<T> {
    letter_map(LetterMap::LambdaT, p)
}

pub fn lambda_ub<T: Scalar>(p: &AbPolynomial<T>) -> AbPolynomial<T> {
    letter_map(LetterMap::LambdaUb, p)
}

/// Removes the last letter of every word; `H'(1) = 0`.
pub fn h_prime<T: Scalar>(p: &AbPolynomial<T>) -> AbPolynomial<T> {
    p.map_linear(|w| match w.len() {
        0 => AbPolynomial::zero(),
        n => AbPolynomial::monomial(w.slice(0..n - 1), T::one()),
    })
}

/// `r(v·a) = v`, `r(v·b) = 0`, `r(1) = 0`.
pub fn r_map<T: Scalar>(p: &AbPolynomial<T>) -> AbPolynomial<T> {
    p.map_linear(|w| match w.last() {
        Some(Ab::A) => AbPolynomial::monomial(w.slice(0..w.len() - 1), T::one()),
        _ => AbPolynomial::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = AbPolynomial<i64>;
    type C = CdPolynomial<i64>;

    fn amb(k: usize) -> P {
        P::a_minus_b_pow(k)
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&P::from_pairs(&[("aaa", 1)])), C::from_pairs(&[("ccc", 1)]));
        assert_eq!(omega(&P::from_pairs(&[("aab", 1)])), C::from_pairs(&[("cd", 2)]));
        assert_eq!(omega(&P::from_pairs(&[("abb", 1)])), C::from_pairs(&[("dc", 2)]));
        assert_eq!(omega(&P::from_pairs(&[("abab", 1)])), C::from_pairs(&[("dd", 4)]));
        let p = P::from_pairs(&[("aaa", 1), ("aba", 5), ("aab", 11), ("abb", 7)]);
        assert_eq!(omega(&p).reverse().to_string(), "c^3 + 22*dc + 24*cd");
    }

    #[test]
    fn letter_map_examples() {
        let p = |s: &str| P::from_pairs(&[(s, 1)]);
        assert_eq!(kappa(&p("aa")), amb(2));
        assert!(kappa(&p("ab")).is_zero());
        assert_eq!(eta(&p("baa")), amb(3).scale(&2));
        assert_eq!(lambda_t(&p("bba")), amb(3));
        assert!(lambda_t(&p("ab")).is_zero());
        assert_eq!(lambda_ub(&p("ba")), amb(2).scale(&2));
        assert!(lambda_ub(&p("bb")).is_zero());
        assert!(lambda_ub(&P::one()).is_zero());
        assert_eq!(eta(&P::one()), P::one().scale(&2));
    }

    #[test]
    fn h_prime_examples() {
        let p = P::from_pairs(&[("aa", 1), ("ba", 2), ("ab", 6), ("bb", 6)]);
        assert_eq!(h_prime(&p), P::from_pairs(&[("a", 7), ("b", 8)]));
        assert!(h_prime(&P::one()).is_zero());
        assert_eq!(h_prime(&P::from_pairs(&[("ab", 1)])), P::a());
    }

    #[test]
    fn r_map_examples() {
        let p = P::from_pairs(&[
            ("aaa", 1),
            ("baa", 5),
            ("aba", 11),
            ("aab", 7),
            ("bba", 7),
            ("bab", 11),
            ("abb", 5),
            ("bbb", 1),
        ]);
        assert_eq!(r_map(&p), P::from_pairs(&[("aa", 1), ("ba", 5), ("ab", 11), ("bb", 7)]));
        assert!(r_map(&P::from_pairs(&[("ab", 1)])).is_zero());
        assert!(r_map(&P::one()).is_zero());
    }
}
