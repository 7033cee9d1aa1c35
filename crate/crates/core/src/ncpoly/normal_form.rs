//! Rewriting ab-polynomials in the cd basis.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::latbase::linsolve;
use crate::scalar::IntScalar;

use super::poly::{AbPolynomial, CdPolynomial, NcPoly};
use super::word::{words_of_degree, AbWord, Cd, CdWord, Letter};

/// Integer coordinates of `target` in the span of `columns`, if any.
fn integer_coordinates<T: IntScalar>(
    target: &AbPolynomial<T>,
    columns: &[AbPolynomial<T>],
    degree: usize,
) -> Option<Vec<T>> {
    let rows: Vec<AbWord> = words_of_degree(degree);
    let a: Vec<Vec<Ratio<T>>> =
        rows.iter().map(|w| columns.iter().map(|c| Ratio::from_integer(c.coeff(w))).collect()).collect();
    let b: Vec<Ratio<T>> = rows.iter().map(|w| Ratio::from_integer(target.coeff(w))).collect();
    let x = linsolve::solve(&a, &b)?;
    x.into_iter().map(|r| r.is_integer().then(|| r.to_integer())).collect()
}

/// The cd-form of a homogeneous ab-polynomial; `Ok(None)` when it has none.
///
/// ```
/// use arrangements::ncpoly::{ab_to_cd, AbPolynomial};
/// let p = AbPolynomial::<i64>::from_pairs(&[("aa", 1), ("ab", 2), ("ba", 2), ("bb", 1)]);
/// assert_eq!(ab_to_cd(&p).unwrap().unwrap().to_string(), "c^2 + d");
/// assert!(ab_to_cd(&AbPolynomial::<i64>::from_pairs(&[("ab", 1)])).unwrap().is_none());
/// ```
pub fn ab_to_cd<T: IntScalar>(p: &AbPolynomial<T>) -> Result<Option<CdPolynomial<T>>> {
    let Some(n) = p.homogeneous_degree()? else {
        return Ok(Some(CdPolynomial::zero()));
    };
    let basis: Vec<CdWord> = words_of_degree(n);
    let columns: Vec<AbPolynomial<T>> =
        basis.iter().map(|w| CdPolynomial::monomial(w.clone(), T::one()).to_ab()).collect();
    Ok(integer_coordinates(p, &columns, n).map(|x| CdPolynomial::from_terms(basis.into_iter().zip(x))))
}

/// `t·(a-b)^{n+1} + Φ` with Φ a cd-polynomial free of `c^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusNormalForm<T: IntScalar> {
    pub n: usize,
    pub t_coeff: T,
    pub phi: CdPolynomial<T>,
}

impl<T: IntScalar> TorusNormalForm<T> {
    pub fn to_ab(&self) -> AbPolynomial<T> {
        &AbPolynomial::a_minus_b_pow(self.n + 1).scale(&self.t_coeff) + &self.phi.to_ab()
    }
}

impl<T: IntScalar> fmt::Display for TorusNormalForm<T> {
    /// e.g. `(a-b)^3 + 7*dc + 8*cd`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = match self.n + 1 {
            1 => "(a-b)".to_string(),
            k => format!("(a-b)^{k}"),
        };
        let lead = if self.t_coeff.is_zero() {
            None
        } else if self.t_coeff.is_one() {
            Some(power)
        } else if (-self.t_coeff.clone()).is_one() {
            Some(format!("-{power}"))
        } else {
            Some(format!("{}*{power}", self.t_coeff))
        };
        match (lead, self.phi.is_zero()) {
            (None, _) => write!(f, "{}", self.phi),
            (Some(l), true) => write!(f, "{l}"),
            (Some(l), false) => {
                let rest = self.phi.to_string();
                match rest.strip_prefix('-') {
                    Some(r) => write!(f, "{l} - {r}"),
                    None => write!(f, "{l} + {rest}"),
                }
            }
        }
    }
}

/// Splits a degree `n+1` polynomial as `t·(a-b)^{n+1} + Φ`.
///
/// The columns `(a-b)^{n+1}` and every cd-word other than `c^{n+1}` are
/// linearly independent for every `n`: for odd `n` the power is
/// `(c²-2d)^{(n+1)/2}`, whose `c^{n+1}` coefficient is 1. So the
/// decomposition is unique whenever it exists. A consequence is that for
/// odd `n` the lone word `c^{n+1}` is representable, as
/// `(a-b)^{n+1} + (c^{n+1} - (c²-2d)^{(n+1)/2})`.
pub fn torus_normal_form<T: IntScalar>(p: &AbPolynomial<T>, n: usize) -> Result<Option<TorusNormalForm<T>>> {
    match p.homogeneous_degree()? {
        None => return Ok(Some(TorusNormalForm { n, t_coeff: T::zero(), phi: CdPolynomial::zero() })),
        Some(d) if d != n + 1 => return Err(Error::InvalidInput(format!("expected degree {}, found {d}", n + 1))),
        Some(_) => {}
    }
    let c_power = CdWord::new(vec![Cd::C; n + 1]);
    let basis: Vec<CdWord> = words_of_degree::<Cd>(n + 1).into_iter().filter(|w| *w != c_power).collect();
    let mut columns = vec![AbPolynomial::a_minus_b_pow(n + 1)];
    columns.extend(basis.iter().map(|w| CdPolynomial::monomial(w.clone(), T::one()).to_ab()));
    Ok(integer_coordinates(p, &columns, n + 1).map(|x| {
        let mut x = x.into_iter();
        let t_coeff = x.next().unwrap_or_else(T::zero);
        TorusNormalForm { n, t_coeff, phi: CdPolynomial::from_terms(basis.into_iter().zip(x)) }
    }))
}

/// Divides every coefficient by two, failing on the first odd one.
pub fn exact_half<L: Letter, T: IntScalar>(p: &NcPoly<L, T>) -> Result<NcPoly<L, T>> {
    let two = T::one() + T::one();
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        let (q, r) = c.div_rem(&two);
        if !r.is_zero() {
            return Err(Error::NonIntegral { word: w.to_string(), coefficient: c.to_string() });
        }
        out.add_term(w.clone(), q);
    }
    Ok(out)
}

/// `(c^{n+1} + (a-b)^{n+1} + Φ)/2` for `sphere = c^{n+1} + Φ`.
///
/// ```
/// use arrangements::ncpoly::{projective_half, CdPolynomial};
/// let hexagon = CdPolynomial::<i64>::from_pairs(&[("cc", 1), ("d", 4)]);
/// let triangle = CdPolynomial::<i64>::from_pairs(&[("cc", 1), ("d", 1)]);
/// assert_eq!(projective_half(&hexagon, 1).unwrap(), triangle.to_ab());
/// ```
pub fn projective_half<T: IntScalar>(sphere: &CdPolynomial<T>, n: usize) -> Result<AbPolynomial<T>> {
    match sphere.homogeneous_degree()? {
        Some(d) if d == n + 1 => {}
        other => {
            return Err(Error::InvalidInput(format!(
                "expected a cd-polynomial of degree {}, found degree {other:?}",
                n + 1
            )))
        }
    }
    let lead = sphere.coeff(&CdWord::new(vec![Cd::C; n + 1]));
    if !lead.is_one() {
        return Err(Error::InvalidInput(format!("the c^{} coefficient must be 1, found {lead}", n + 1)));
    }
    exact_half(&(&sphere.to_ab() + &AbPolynomial::a_minus_b_pow(n + 1)))
}
