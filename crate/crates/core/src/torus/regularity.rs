//! Necessary conditions for the induced subdivision to be a regular cell
//! complex. None of them decides regularity; a failure is a witness
//! against it.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::latbase::{frac, linsolve, snf};
use crate::ncpoly::{Cd, CdWord};
use crate::scalar::IntScalar;

use super::{euler_sum, ratio_dot, ToricPoset, TorusArrangement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Corners are pairs (vertex, local chamber at the vertex). Each corner
/// lies in one region; a region owning two corners at the same vertex has
/// a closure that is not a ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerReport {
    pub corners: usize,
    pub regions: usize,
    /// `(vertex index, corners of one region at it)` for every repeat.
    pub repeated: Vec<(usize, usize)>,
}

impl CornerReport {
    pub fn ok(&self) -> bool {
        self.repeated.is_empty()
    }
}

/// Regions of the lifted arrangement are the nonempty slabs
/// `k_i < a_i·x - b_i < k_i + 1`; on the torus, `k` matters modulo the
/// image of the normal matrix `A`. The key of a corner is `U·k` reduced by
/// the Smith form `U·A·V = D`.
pub fn corner_check<I: IntScalar>(a: &TorusArrangement<I>, p: &ToricPoset<I>) -> Result<CornerReport> {
    let hs = a.hyperplanes();
    let s = snf(&a.normal_matrix());
    let divisors = s.divisors();
    let mut owners: BTreeMap<Vec<I>, Vec<usize>> = BTreeMap::new();
    let mut corners = 0;
    for x in p.points() {
        let w = p.flat_ref(x).base();
        let values: Vec<Ratio<I>> = hs.iter().map(|h| ratio_dot(h.normal(), w) - h.offset()).collect();
        let through: Vec<usize> =
            (0..hs.len()).filter(|&i| frac(&values[i]) == Ratio::from_integer(I::zero())).collect();
        for chamber in chambers(a, &through) {
            corners += 1;
            let k: Vec<I> = (0..hs.len())
                .map(|i| match through.iter().position(|&j| j == i) {
                    Some(pos) if chamber[pos] => values[i].to_integer(),
                    Some(_) => values[i].to_integer() - I::one(),
                    None => values[i].floor().to_integer(),
                })
                .collect();
            let key: Vec<I> = (0..hs.len())
                .map(|i| {
                    let v = s.u.row(i).iter().zip(&k).fold(I::zero(), |acc, (u, ki)| acc + u.clone() * ki.clone());
                    match divisors.get(i) {
                        Some(d) => v.mod_floor(d),
                        None => v,
                    }
                })
                .collect();
            owners.entry(key).or_default().push(x);
        }
    }
    let mut repeated = Vec::new();
    for pts in owners.values() {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in pts {
            *counts.entry(x).or_default() += 1;
        }
        repeated.extend(counts.into_iter().filter(|&(_, c)| c > 1));
    }
    Ok(CornerReport { corners, regions: owners.len(), repeated })
}

/// Sign vectors (true = positive side) of the chambers of the central
/// arrangement with the normals of `through`, built one hyperplane at a
/// time.
fn chambers<I: IntScalar>(a: &TorusArrangement<I>, through: &[usize]) -> Vec<Vec<bool>> {
    let normals: Vec<Vec<Ratio<I>>> = through
        .iter()
        .map(|&i| a.hyperplanes()[i].normal().iter().map(|x| Ratio::from_integer(x.clone())).collect())
        .collect();
    let mut out: Vec<Vec<bool>> = vec![Vec::new()];
    for _ in 0..normals.len() {
        let mut next = Vec::new();
        for sigma in &out {
            for side in [true, false] {
                let mut cand = sigma.clone();
                cand.push(side);
                let rows: Vec<(Vec<Ratio<I>>, Ratio<I>)> = cand
                    .iter()
                    .zip(&normals)
                    .map(|(&pos, nrm)| {
                        let row = if pos { nrm.clone() } else { nrm.iter().map(|x| -x.clone()).collect() };
                        (row, Ratio::from_integer(I::one()))
                    })
                    .collect();
                if linsolve::feasible(&rows) {
                    next.push(cand);
                }
            }
        }
        out = next;
    }
    out
}

/// Runs every necessary condition; all of them pass on a regular
/// subdivision.
pub fn regularity_checks<I: IntScalar>(a: &TorusArrangement<I>, p: &ToricPoset<I>) -> Vec<RegularityCheck> {
    let mut out = Vec::new();
    let mut push =
        |name: &str, passed: bool, detail: String| out.push(RegularityCheck { name: name.to_string(), passed, detail });
    let n = p.dim();
    let points = p.points().len();
    push("vertices", points > 0, format!("{points} zero-dimensional flats"));
    match p.face_ab_index::<i64>() {
        Ok(face) => {
            push("exact-half", true, "½·ω(a·H'(Ψ)·b) has integer coefficients".into());
            let ok = face
                .normal_form
                .as_ref()
                .is_some_and(|nf| nf.t_coeff == 1 && nf.phi.coeff(&CdWord::new(vec![Cd::C; n + 1])) == 0);
            let detail = face.normal_form.map_or_else(|| "no torus normal form".into(), |nf| nf.to_string());
            push("normal-form", ok, detail);
        }
        Err(e) => {
            push("exact-half", false, e.to_string());
            push("normal-form", false, "face ab-index unavailable".into());
        }
    }
    match p.divisibility_check() {
        Ok(d) => {
            let bad: Vec<String> = d.iter().filter(|x| !x.ok).map(|x| format!("f_{:?} = {}", x.set, x.value)).collect();
            push("divisibility", bad.is_empty(), if bad.is_empty() { "all entries".into() } else { bad.join(", ") });
        }
        Err(e) => push("divisibility", false, e.to_string()),
    }
    match p.f_vector() {
        Ok(f) => {
            let e = euler_sum(&f);
            push("euler", e == 0, format!("f = {f:?}, alternating sum {e}"));
        }
        Err(e) => push("euler", false, e.to_string()),
    }
    match corner_check(a, p) {
        Ok(c) => {
            let detail = if c.ok() {
                format!("{} corners in {} regions, no region meets a vertex twice", c.corners, c.regions)
            } else {
                let reps: Vec<String> =
                    c.repeated.iter().map(|(x, k)| format!("{k} corners of one region at element {x}")).collect();
                reps.join(", ")
            };
            push("corners", c.ok() && points > 0, detail);
        }
        Err(e) => push("corners", false, e.to_string()),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::build_poset;
    use super::super::tests::{cubical, three_lines, three_points};
    use super::*;

    #[test]
    fn three_points_is_not_regular() {
        let a = three_points();
        let p = build_poset(&a).unwrap();
        let c = corner_check(&a, &p).unwrap();
        assert_eq!(c.corners, 12);
        assert_eq!(c.regions, 3);
        assert!(!c.ok());
        let checks = regularity_checks(&a, &p);
        let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["corners"]);
    }

    #[test]
    fn regular_examples_pass() {
        for a in [three_lines(), cubical()] {
            let p = build_poset(&a).unwrap();
            let checks = regularity_checks(&a, &p);
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
            assert_eq!(corner_check(&a, &p).unwrap().regions as i64, p.region_count().unwrap());
        }
    }
}
