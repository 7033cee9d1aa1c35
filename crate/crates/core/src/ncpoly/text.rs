//! Parsing of the text form printed by `Display`, e.g. `c^3 + 22*dc + 24*cd`.

use crate::error::{Error, Result};
use crate::scalar::{IntScalar, Scalar};

use super::normal_form::TorusNormalForm;
use super::poly::{AbPolynomial, CdPolynomial, NcPoly};
use super::word::{Letter, Word};

/// Splits a signed sum into `(negative, term)` pieces.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut depth = 0usize;
    for (i, ch) in compact.chars().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if (ch == '+' || ch == '-') && depth == 0 {
            if i > 0 {
                if current.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in `{s}`")));
                }
                out.push((negative, std::mem::take(&mut current)));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("trailing sign in `{s}`")));
    }
    out.push((negative, current));
    Ok(out)
}

fn parse_coeff<T: Scalar>(s: &str) -> Result<T> {
    T::from_str_radix(s, 10).map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))
}

fn parse_term<L: Letter, T: Scalar>(term: &str) -> Result<(Word<L>, T)> {
    let (coeff, word) = match term.split_once('*') {
        Some((c, w)) => (parse_coeff(c)?, w),
        None if term.chars().all(|c| c.is_ascii_digit()) => (parse_coeff(term)?, ""),
        None => (T::one(), term),
    };
    let word = Word::parse(word).ok_or_else(|| Error::Parse(format!("bad word `{word}`")))?;
    Ok((word, coeff))
}

/// Parses a canonical sum of terms such as `7*dc + 8*cd`, `-2*ab + b^2`,
/// `1` or `0`.
pub fn parse_poly<L: Letter, T: Scalar>(s: &str) -> Result<NcPoly<L, T>> {
    if s.trim() == "0" {
        return Ok(NcPoly::zero());
    }
    let mut p = NcPoly::zero();
    for (negative, term) in split_terms(s)? {
        let (w, c) = parse_term::<L, T>(&term)?;
        p.add_term(w, if negative { -c } else { c });
    }
    Ok(p)
}

pub fn parse_ab<T: Scalar>(s: &str) -> Result<AbPolynomial<T>> {
    parse_poly(s)
}

pub fn parse_cd<T: Scalar>(s: &str) -> Result<CdPolynomial<T>> {
    parse_poly(s)
}

/// Parses the display form `(a-b)^3 + 7*dc + 8*cd`.
pub fn parse_torus_form<T: IntScalar>(s: &str, n: usize) -> Result<TorusNormalForm<T>> {
    let power = match n + 1 {
        1 => "(a-b)".to_string(),
        k => format!("(a-b)^{k}"),
    };
    let mut t_coeff = T::zero();
    let mut phi = CdPolynomial::zero();
    if s.trim() == "0" {
        return Ok(TorusNormalForm { n, t_coeff, phi });
    }
    for (negative, term) in split_terms(s)? {
        let sign = |c: T| if negative { -c } else { c };
        if let Some(prefix) = term.strip_suffix(power.as_str()) {
            let c = match prefix.strip_suffix('*') {
                Some(c) => parse_coeff(c)?,
                None if prefix.is_empty() => T::one(),
                None => return Err(Error::Parse(format!("bad term `{term}`"))),
            };
            t_coeff = t_coeff + sign(c);
        } else if term.contains('(') {
            return Err(Error::Parse(format!("expected `{power}`, found `{term}`")));
        } else {
            let (w, c) = parse_term(&term)?;
            phi.add_term(w, sign(c));
        }
    }
    Ok(TorusNormalForm { n, t_coeff, phi })
}
