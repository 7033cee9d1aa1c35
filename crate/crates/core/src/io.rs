//! Arrangement and graph files.
//!
//! ```json
//! {"space": "torus", "n": 2, "hyperplanes": [{"normal": [1, 1], "offset": "1/3"}]}
//! {"vertices": 3, "edges": [[1, 2], [2, 3]]}
//! ```

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::euclid::EuclidArrangement;
use crate::graph::SimpleGraph;
use crate::hyperplane::Hyperplane;
use crate::latbase::json::{int_to_json, int_vec_from_json, ratio_from_json, ratio_to_json};
use crate::scalar::IntScalar;
use crate::torus::TorusArrangement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arrangement<I: IntScalar> {
    Euclidean(EuclidArrangement<I>),
    Torus(TorusArrangement<I>),
}

impl<I: IntScalar> Arrangement<I> {
    pub fn dim(&self) -> usize {
        match self {
            Self::Euclidean(a) => a.dim(),
            Self::Torus(a) => a.dim(),
        }
    }

    pub fn hyperplanes(&self) -> &[Hyperplane<I>] {
        match self {
            Self::Euclidean(a) => a.hyperplanes(),
            Self::Torus(a) => a.hyperplanes(),
        }
    }

    pub fn space(&self) -> &'static str {
        match self {
            Self::Euclidean(_) => "euclidean",
            Self::Torus(_) => "torus",
        }
    }
}

fn field<'a>(v: &'a Value, key: &str, at: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("{at}: missing field `{key}`")))
}

fn located<T>(r: Result<T>, at: &str) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{at}: {m}")),
        e => Error::Parse(format!("{at}: {e}")),
    })
}

fn parse_document(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn as_count(v: &Value, at: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("{at}: expected a nonnegative integer, found {v}")))
}

pub fn arrangement_from_json<I: IntScalar>(v: &Value) -> Result<Arrangement<I>> {
    let space = field(v, "space", "arrangement")?;
    let n = as_count(field(v, "n", "arrangement")?, "n")?;
    let list = field(v, "hyperplanes", "arrangement")?
        .as_array()
        .ok_or_else(|| Error::Parse("hyperplanes: expected an array".into()))?;
    let mut hs = Vec::with_capacity(list.len());
    for (k, h) in list.iter().enumerate() {
        let at = format!("hyperplanes[{k}]");
        let normal: Vec<I> = located(int_vec_from_json(field(h, "normal", &at)?), &format!("{at}.normal"))?;
        if normal.len() != n {
            return Err(Error::Parse(format!("{at}.normal: expected {n} entries, found {}", normal.len())));
        }
        let offset = located(ratio_from_json(field(h, "offset", &at)?), &format!("{at}.offset"))?;
        hs.push(located(Hyperplane::new(normal, offset), &at)?);
    }
    let a = match space.as_str() {
        Some("euclidean") => Arrangement::Euclidean(EuclidArrangement::new(n, hs)?),
        Some("torus") => Arrangement::Torus(TorusArrangement::new(n, hs)?),
        _ => return Err(Error::Parse(format!("space: expected \"euclidean\" or \"torus\", found {space}"))),
    };
    Ok(a)
}

pub fn parse_arrangement<I: IntScalar>(text: &str) -> Result<Arrangement<I>> {
    arrangement_from_json(&parse_document(text)?)
}

pub fn arrangement_to_json<I: IntScalar>(a: &Arrangement<I>) -> Value {
    let hs: Vec<Value> = a
        .hyperplanes()
        .iter()
        .map(|h| json!({"normal": h.normal().iter().map(int_to_json).collect::<Vec<_>>(), "offset": ratio_to_json(h.offset())}))
        .collect();
    json!({"space": a.space(), "n": a.dim(), "hyperplanes": hs})
}

pub fn graph_from_json(v: &Value) -> Result<SimpleGraph> {
    let n = as_count(field(v, "vertices", "graph")?, "vertices")?;
    let list = field(v, "edges", "graph")?.as_array().ok_or_else(|| Error::Parse("edges: expected an array".into()))?;
    let mut edges = Vec::with_capacity(list.len());
    for (k, e) in list.iter().enumerate() {
        let at = format!("edges[{k}]");
        match e.as_array().map(Vec::as_slice) {
            Some([i, j]) => edges.push((as_count(i, &at)?, as_count(j, &at)?)),
            _ => return Err(Error::Parse(format!("{at}: expected a pair [i, j], found {e}"))),
        }
    }
    located(SimpleGraph::new(n, &edges), "edges")
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    graph_from_json(&parse_document(text)?)
}

pub fn graph_to_json(g: &SimpleGraph) -> Value {
    json!({"vertices": g.n_vertices(), "edges": g.edges().iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>()})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_round_trip() {
        let text = r#"{"space": "torus", "n": 2, "hyperplanes": [
            {"normal": [1, 1], "offset": "4/3"}, {"normal": [-2, 2], "offset": 0}]}"#;
        let a = parse_arrangement::<i64>(text).unwrap();
        let v = arrangement_to_json(&a);
        assert_eq!(v["hyperplanes"][0]["offset"], "1/3");
        assert_eq!(v["hyperplanes"][1]["normal"], json!([1, -1]));
        assert_eq!(arrangement_from_json::<i64>(&v).unwrap(), a);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let bad = r#"{"space": "euclidean", "n": 2, "hyperplanes": [{"normal": [1, 0], "offset": "1/0"}]}"#;
        let e = parse_arrangement::<i64>(bad).unwrap_err().to_string();
        assert!(e.contains("hyperplanes[0].offset"), "{e}");
        let bad = r#"{"space": "euclidean", "n": 2, "hyperplanes": [{"normal": [1], "offset": 0}]}"#;
        assert!(parse_arrangement::<i64>(bad).unwrap_err().to_string().contains("expected 2 entries"));
        let e = parse_arrangement::<i64>("{\n\"space\": }").unwrap_err().to_string();
        assert!(e.contains("line 2"), "{e}");
        assert!(parse_arrangement::<i64>(r#"{"space": "sphere", "n": 1, "hyperplanes": []}"#).is_err());
    }

    #[test]
    fn graph_round_trip() {
        let g = parse_graph(r#"{"vertices": 3, "edges": [[2, 1], [2, 3]]}"#).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[1, 1]]}"#).is_err());
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[1, 2, 3]]}"#).is_err());
    }
}
