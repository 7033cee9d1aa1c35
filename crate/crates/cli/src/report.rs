//! The `analyze` report. The JSON form mirrors every field of the text form.

use std::fmt;

use arrangements::euclid::{build_lattice, IntersectionLattice};
use arrangements::poset::flag_vectors;
use arrangements::torus::{build_poset, regularity_checks, RegularityCheck, ToricPoset};
use arrangements::{Arrangement, Error, EuclidArrangement, RankedPoset, TorusArrangement};
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Element {
    pub index: usize,
    pub rank: usize,
    /// `None` for the empty set.
    pub dim: Option<usize>,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regions {
    pub regions: i64,
    pub bounded: Option<i64>,
    pub unbounded: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagEntry {
    pub set: Vec<usize>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    /// `central`, `unbounded` or `torus`.
    pub complex: String,
    pub ab_index: String,
    pub cd_index: Option<String>,
    pub normal_form: Option<String>,
    pub t_coeff: Option<i64>,
    /// Faces of dimension 0, 1, ..., n of the whole subdivision.
    pub f_vector: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub space: String,
    pub n: usize,
    pub hyperplanes: usize,
    /// Euclidean only.
    pub central: Option<bool>,
    pub essential: bool,
    pub levels: Vec<usize>,
    pub elements: Vec<Element>,
    pub char_poly: String,
    /// Constant term first.
    pub char_poly_coeffs: Vec<i64>,
    pub regions: Option<Regions>,
    pub flag_f: Vec<FlagEntry>,
    pub flag_h: Vec<FlagEntry>,
    pub ab_index: String,
    pub face: Option<Face>,
    /// Torus only.
    pub regularity: Vec<RegularityCheck>,
    pub warnings: Vec<String>,
}

/// Keeps going past a failed step, recording it as a warning. Internal
/// consistency failures still abort.
fn soft<T>(r: arrangements::Result<T>, what: &str, warnings: &mut Vec<String>) -> Result<Option<T>, Failure> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::ConsistencyFailure(_)) => Err(e.into()),
        Err(e) => {
            warnings.push(format!("{what}: {e}"));
            Ok(None)
        }
    }
}

fn flag_entries(p: &RankedPoset) -> Result<(Vec<FlagEntry>, Vec<FlagEntry>), Failure> {
    let (f, h) = flag_vectors::<i64>(p)?;
    let entries = |v: &arrangements::poset::FlagVector<i64>| {
        v.by_size().into_iter().map(|(set, value)| FlagEntry { set, value }).collect()
    };
    Ok((entries(&f), entries(&h)))
}

/// Faces of each dimension of a Euclidean arrangement: a flat `x`
/// contributes the regions of the restriction to `x`.
pub fn euclid_f_vector(l: &IntersectionLattice<i64>) -> Vec<i64> {
    let mut f = vec![0; l.dim() + 1];
    for x in 0..l.len() {
        if let Some(flat) = l.flat(x) {
            let row = l.poset().mobius_row(x);
            let restricted: i64 = (0..l.len()).filter(|&y| l.flat(y).is_some()).map(|y| row[y].abs()).sum();
            f[flat.dim()] += restricted;
        }
    }
    f
}

pub fn analyze(a: &Arrangement) -> Result<Report, Failure> {
    match a {
        Arrangement::Euclidean(e) => analyze_euclid(e),
        Arrangement::Torus(t) => analyze_torus(t),
    }
}

fn analyze_euclid(a: &EuclidArrangement) -> Result<Report, Failure> {
    let l = build_lattice(a)?;
    let mut warnings = Vec::new();
    if a.hyperplanes().is_empty() {
        warnings.push("no hyperplanes".into());
    }
    let chi = l.char_poly();
    let regions = soft(l.region_counts(), "region counts", &mut warnings)?.map(|c| Regions {
        regions: c.regions,
        bounded: Some(c.bounded),
        unbounded: Some(c.unbounded),
    });
    let (flag_f, flag_h) = flag_entries(l.poset())?;
    let ab = l.ab_index::<i64>()?;
    let (complex, cd) = if l.is_central() {
        ("central", soft(l.central_face_cd_index::<i64>(), "face cd-index", &mut warnings)?)
    } else {
        ("unbounded", soft(l.unbounded_cd_index::<i64>(), "unbounded cd-index", &mut warnings)?)
    };
    let f_vector = Some(euclid_f_vector(&l));
    let face = cd.map(|cd| Face {
        complex: complex.into(),
        ab_index: cd.to_ab().to_string(),
        cd_index: Some(cd.to_string()),
        normal_form: None,
        t_coeff: None,
        f_vector: f_vector.clone(),
    });
    let elements = (0..l.len())
        .map(|x| Element { index: x, rank: l.poset().rank(x), dim: l.flat(x).map(|f| f.dim()), label: l.label(x) })
        .collect();
    Ok(Report {
        space: "euclidean".into(),
        n: a.dim(),
        hyperplanes: a.hyperplanes().len(),
        central: Some(l.is_central()),
        essential: a.is_essential(),
        levels: l.level_sizes(),
        elements,
        char_poly: chi.to_string(),
        char_poly_coeffs: chi.coeffs().to_vec(),
        regions,
        flag_f,
        flag_h,
        ab_index: ab.to_string(),
        face,
        regularity: Vec::new(),
        warnings,
    })
}

fn analyze_torus(a: &TorusArrangement) -> Result<Report, Failure> {
    let p: ToricPoset<i64> = build_poset(a)?;
    let mut warnings = Vec::new();
    if a.hyperplanes().is_empty() {
        warnings.push("no hyperplanes".into());
    }
    let essential = a.is_essential();
    if p.points().is_empty() {
        warnings.push(
            "no zero-dimensional flats: the regions are not open balls and the region count is Z_t, unchecked".into(),
        );
    } else if !essential {
        warnings.push("arrangement is not essential".into());
    }
    let chi = p.char_poly();
    let regions = soft(p.region_count(), "region count", &mut warnings)?.map(|r| Regions {
        regions: r,
        bounded: None,
        unbounded: None,
    });
    let (flag_f, flag_h) = flag_entries(p.poset())?;
    let ab = p.ab_index::<i64>()?;
    let face = match soft(p.face_ab_index::<i64>(), "face ab-index", &mut warnings)? {
        Some(fi) => {
            if fi.normal_form.is_none() {
                warnings.push("face ab-index has no torus normal form".into());
            }
            let f_vector = if p.points().is_empty() { None } else { soft(p.f_vector(), "f-vector", &mut warnings)? };
            Some(Face {
                complex: "torus".into(),
                ab_index: fi.ab.to_string(),
                cd_index: None,
                normal_form: fi.normal_form.as_ref().map(|nf| nf.to_string()),
                t_coeff: fi.normal_form.as_ref().map(|nf| nf.t_coeff),
                f_vector,
            })
        }
        None => None,
    };
    let regularity = regularity_checks(a, &p);
    let elements = (0..p.len())
        .map(|x| Element { index: x, rank: p.poset().rank(x), dim: p.flat(x).map(|f| f.dim()), label: p.label(x) })
        .collect();
    Ok(Report {
        space: "torus".into(),
        n: a.dim(),
        hyperplanes: a.hyperplanes().len(),
        central: None,
        essential,
        levels: p.level_sizes(),
        elements,
        char_poly: chi.to_string(),
        char_poly_coeffs: chi.coeffs().to_vec(),
        regions,
        flag_f,
        flag_h,
        ab_index: ab.to_string(),
        face,
        regularity,
        warnings,
    })
}

fn set_name(s: &[usize]) -> String {
    let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn flag_line(entries: &[FlagEntry]) -> String {
    entries.iter().map(|e| format!("{}: {}", set_name(&e.set), e.value)).collect::<Vec<_>>().join(", ")
}

fn numbers(v: &[impl fmt::Display]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Regions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.regions)?;
        if let (Some(b), Some(u)) = (self.bounded, self.unbounded) {
            write!(f, " ({b} bounded, {u} unbounded)")?;
        }
        Ok(())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.central {
            Some(true) => ", central",
            Some(false) => ", non-central",
            None => "",
        };
        writeln!(f, "space: {} (n = {}, {} hyperplanes{kind})", self.space, self.n, self.hyperplanes)?;
        writeln!(f, "essential: {}", if self.essential { "yes" } else { "no" })?;
        writeln!(f, "levels: {}", numbers(&self.levels))?;
        writeln!(f, "elements:")?;
        for e in &self.elements {
            writeln!(f, "  {:>3}  rank {}  {}", e.index, e.rank, e.label)?;
        }
        writeln!(f, "characteristic polynomial: {}", self.char_poly)?;
        match &self.regions {
            Some(r) => writeln!(f, "regions: {r}")?,
            None => writeln!(f, "regions: unavailable")?,
        }
        writeln!(f, "flag f: {}", flag_line(&self.flag_f))?;
        writeln!(f, "flag h: {}", flag_line(&self.flag_h))?;
        writeln!(f, "ab-index: {}", self.ab_index)?;
        if let Some(face) = &self.face {
            writeln!(f, "face complex: {}", face.complex)?;
            if let Some(cd) = &face.cd_index {
                writeln!(f, "  cd-index: {cd}")?;
            }
            writeln!(f, "  ab-index: {}", face.ab_index)?;
            if let Some(nf) = &face.normal_form {
                writeln!(f, "  torus normal form: {nf}")?;
            }
            if let Some(fv) = &face.f_vector {
                writeln!(f, "  f-vector: {}", numbers(fv))?;
            }
        }
        if !self.regularity.is_empty() {
            writeln!(f, "regularity (necessary conditions):")?;
            for c in &self.regularity {
                writeln!(f, "  {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail)?;
            }
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}
