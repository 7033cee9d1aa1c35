//! The maps φ, φ_t and φ_ub, evaluated straight from their coproduct sums.

use crate::error::Result;
use crate::scalar::Scalar;

use super::coproduct::{contract, kary_coproduct_tensor};
use super::maps::{letter_map, LetterMap};
use super::poly::AbPolynomial;
use super::word::AbWord;

/// `Σ_k Σ κ(v₁)·b·η(v₂)·b ⋯ b·η(v_{k-1})·b·last(v_k)`, with the `k = 1`
/// term equal to `κ(v)`.
fn coproduct_sum<T: Scalar>(p: &AbPolynomial<T>, last: LetterMap) -> Result<AbPolynomial<T>> {
    p.homogeneous_degree()?;
    let b = AbPolynomial::<T>::b();
    let mono = |w: &AbWord| AbPolynomial::monomial(w.clone(), T::one());
    let mut out = letter_map(LetterMap::Kappa, p);
    let max_len = p.terms().map(|(w, _)| w.len()).max().unwrap_or(0);
    for k in 2..=max_len + 1 {
        let tensor = kary_coproduct_tensor(p, k);
        out += &contract(&tensor, |parts| {
            let mut acc = letter_map(LetterMap::Kappa, &mono(&parts[0]));
            for (i, part) in parts.iter().enumerate().skip(1) {
                if acc.is_zero() {
                    break;
                }
                let kind = if i + 1 == parts.len() { last } else { LetterMap::Eta };
                acc = &(&acc * &b) * &letter_map(kind, &mono(part));
            }
            acc
        });
    }
    Ok(out)
}

/// φ; rejects non-homogeneous input.
pub fn phi<T: Scalar>(p: &AbPolynomial<T>) -> Result<AbPolynomial<T>> {
    coproduct_sum(p, LetterMap::Eta)
}

/// φ_t: as φ with λ_t on the last tensor factor.
pub fn phi_t<T: Scalar>(p: &AbPolynomial<T>) -> Result<AbPolynomial<T>> {
    coproduct_sum(p, LetterMap::LambdaT)
}

/// φ_ub: as φ with λ_ub on the last tensor factor.
pub fn phi_ub<T: Scalar>(p: &AbPolynomial<T>) -> Result<AbPolynomial<T>> {
    coproduct_sum(p, LetterMap::LambdaUb)
}
