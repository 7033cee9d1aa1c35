//! The ab-index of a ranked poset, three ways.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncpoly::AbPolynomial;
use crate::scalar::Scalar;

use super::flag::flag_f;
use super::RankedPoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AbIndexMethod {
    /// `Σ_S h_S u_S`
    FlagH,
    /// Sum of chain weights `(a-b)^{ρ(x₀,x₁)-1} b (a-b)^{ρ(x₁,x₂)-1} b ⋯`
    ChainWeights,
    /// `Ψ(P) = (a-b)^{ρ-1} + Σ_{0̂<x<1̂} (a-b)^{ρ(x)-1} b Ψ([x,1̂])`
    Recursion,
}

impl AbIndexMethod {
    pub const ALL: [AbIndexMethod; 3] = [AbIndexMethod::FlagH, AbIndexMethod::ChainWeights, AbIndexMethod::Recursion];
}

pub fn ab_index<T: Scalar>(p: &RankedPoset, method: AbIndexMethod) -> Result<AbPolynomial<T>> {
    if p.poset_rank() == 0 {
        return Err(Error::InvalidPoset("the ab-index needs rank at least 1".into()));
    }
    Ok(match method {
        AbIndexMethod::FlagH => flag_f::<T>(p).f_to_h().to_ab(),
        AbIndexMethod::ChainWeights => chain_weights(p),
        AbIndexMethod::Recursion => recursion(p),
    })
}

fn chain_weights<T: Scalar>(p: &RankedPoset) -> AbPolynomial<T> {
    let b = AbPolynomial::<T>::b();
    let mut powers: Vec<AbPolynomial<T>> = Vec::new();
    let mut power = |k: usize| -> AbPolynomial<T> {
        while powers.len() <= k {
            powers.push(AbPolynomial::a_minus_b_pow(powers.len()));
        }
        powers[k].clone()
    };
    let mut total = AbPolynomial::zero();
    // Depth-first over chains from 0̂; `prefix` is the weight so far.
    let mut stack = vec![(p.bottom(), AbPolynomial::<T>::one())];
    while let Some((x, prefix)) = stack.pop() {
        for y in p.up_set(x).filter(|&y| y != x) {
            let step = &prefix * &power(p.rank(y) - p.rank(x) - 1);
            if y == p.top() {
                total += &step;
            } else {
                stack.push((y, &step * &b));
            }
        }
    }
    total
}

fn recursion<T: Scalar>(p: &RankedPoset) -> AbPolynomial<T> {
    let mut memo: HashMap<usize, AbPolynomial<T>> = HashMap::new();
    let b = AbPolynomial::<T>::b();
    let top = p.top();
    let order = p.linear_extension();
    // Ψ([x, 1̂]) for x in decreasing rank, so every upper interval is ready.
    for &x in order.iter().rev() {
        if x == top {
            continue;
        }
        let rank = p.rank(top) - p.rank(x);
        let mut psi = AbPolynomial::a_minus_b_pow(rank - 1);
        for y in p.up_set(x).filter(|&y| y != x && y != top) {
            let head = &AbPolynomial::a_minus_b_pow(p.rank(y) - p.rank(x) - 1) * &b;
            psi += &(&head * &memo[&y]);
        }
        memo.insert(x, psi);
    }
    memo.remove(&p.bottom()).expect("bottom differs from top")
}
