//! JSON encodings. Rationals are `"p/q"` strings (or plain integers), integer
//! entries are JSON numbers, falling back to strings beyond 64 bits.

use num_rational::Ratio;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::IntScalar;

use super::affine_flat::AffineFlat;
use super::matrix::Matrix;
use super::toric_flat::ToricFlat;

pub fn format_ratio<I: IntScalar>(x: &Ratio<I>) -> String {
    x.to_string()
}

fn parse_int<I: IntScalar>(s: &str) -> Result<I> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    I::from_str_radix(t, 10).map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
}

/// Accepts `"p/q"`, `"p"` and surrounding whitespace.
pub fn parse_ratio<I: IntScalar>(s: &str) -> Result<Ratio<I>> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q: I = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("`{s}` has a zero denominator")));
            }
            Ok(Ratio::new(parse_int(p)?, q))
        }
        None => Ok(Ratio::from_integer(parse_int(s)?)),
    }
}

pub fn int_to_json<I: IntScalar>(x: &I) -> Value {
    let s = x.to_string();
    match s.parse::<i64>() {
        Ok(v) => json!(v),
        Err(_) => json!(s),
    }
}

pub fn int_from_json<I: IntScalar>(v: &Value) -> Result<I> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(I::from_int(n.as_i64().expect("checked"))),
        Value::String(s) => parse_int(s),
        _ => Err(Error::Parse(format!("expected an integer, found {v}"))),
    }
}

pub fn ratio_to_json<I: IntScalar>(x: &Ratio<I>) -> Value {
    json!(format_ratio(x))
}

/// A `"p/q"` string or a JSON integer.
pub fn ratio_from_json<I: IntScalar>(v: &Value) -> Result<Ratio<I>> {
    match v {
        Value::String(s) => parse_ratio(s),
        Value::Number(_) => Ok(Ratio::from_integer(int_from_json(v)?)),
        _ => Err(Error::Parse(format!("expected a rational, found {v}"))),
    }
}

fn array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("expected an array, found {v}")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("`{key}` must be a nonnegative integer")))
}

pub fn int_vec_from_json<I: IntScalar>(v: &Value) -> Result<Vec<I>> {
    array(v)?.iter().map(int_from_json).collect()
}

pub fn ratio_vec_from_json<I: IntScalar>(v: &Value) -> Result<Vec<Ratio<I>>> {
    array(v)?.iter().map(ratio_from_json).collect()
}

pub fn matrix_to_json<I: IntScalar>(m: &Matrix<I>) -> Value {
    json!({
        "rows": m.nrows(),
        "cols": m.ncols(),
        "data": m.rows().iter().map(|r| r.iter().map(int_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn matrix_from_json<I: IntScalar>(v: &Value) -> Result<Matrix<I>> {
    let cols = usize_field(v, "cols")?;
    let data: Vec<Vec<I>> = array(field(v, "data")?)?.iter().map(int_vec_from_json).collect::<Result<_>>()?;
    if data.iter().any(|r| r.len() != cols) || data.len() != usize_field(v, "rows")? {
        return Err(Error::Parse("matrix shape does not match its data".into()));
    }
    Ok(Matrix::from_rows(cols, data))
}

impl<I: IntScalar> ToricFlat<I> {
    /// `{"n": 2, "dirs": [[1, 3]], "base": ["0", "1/5"]}`
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.ambient(),
            "dirs": self.dirs().iter().map(|d| d.iter().map(int_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "base": self.base().iter().map(ratio_to_json).collect::<Vec<_>>(),
        })
    }

    /// Accepts any presentation and canonicalizes it.
    pub fn from_json(v: &Value) -> Result<Self> {
        let n = usize_field(v, "n")?;
        let dirs: Vec<Vec<I>> = array(field(v, "dirs")?)?.iter().map(int_vec_from_json).collect::<Result<_>>()?;
        let base = ratio_vec_from_json(field(v, "base")?)?;
        ToricFlat::new(n, &dirs, &base)
    }
}

impl<I: IntScalar> AffineFlat<I> {
    /// `{"n": 3, "equations": [{"normal": ["1", "0", "0"], "offset": "1/2"}]}`
    pub fn to_json(&self) -> Value {
        let eqs: Vec<Value> = self
            .equations()
            .map(
                |(a, b)| json!({"normal": a.iter().map(ratio_to_json).collect::<Vec<_>>(), "offset": ratio_to_json(b)}),
            )
            .collect();
        json!({"n": self.ambient(), "equations": eqs})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = usize_field(v, "n")?;
        let eqs = array(field(v, "equations")?)?
            .iter()
            .map(|e| Ok((ratio_vec_from_json(field(e, "normal")?)?, ratio_from_json(field(e, "offset")?)?)))
            .collect::<Result<Vec<_>>>()?;
        AffineFlat::from_equations(n, &eqs)?.ok_or_else(|| Error::InvalidInput("equations are inconsistent".into()))
    }
}
