//! Named checks: the built-in suite and the cross-checks run on one file.

use std::fmt::{self, Debug};

use arrangements::euclid::{build_lattice, IntersectionLattice};
use arrangements::graph::{
    chromatic_poly, count_acyclic_orientations, count_acyclic_unique_sink, graphical_arrangement,
    graphical_region_count, SimpleGraph,
};
use arrangements::ncpoly::{
    ab_to_cd, beta, eta, h_prime, kappa, lambda_t, lambda_ub, omega, parse_ab, parse_cd, phi, projective_half,
    AbPolynomial, CdPolynomial,
};
use arrangements::poset::{ab_index, philip_hall_check, random_graded, AbIndexMethod, FlagVector, Zaslavsky};
use arrangements::torus::{build_poset, euler_sum, regularity_checks, ToricPoset};
use arrangements::unipoly::UniPolynomial;
use arrangements::{Arrangement, EuclidArrangement, Hyperplane, RankedPoset, TorusArrangement};
use num_integer::Integer;
use serde::Serialize;

use crate::report::euclid_f_vector;

type P = AbPolynomial<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub group: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Default, Serialize)]
pub struct Suite {
    pub checks: Vec<Check>,
    #[serde(skip)]
    group: String,
}

impl Suite {
    fn group(&mut self, g: &str) {
        self.group = g.to_string();
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { group: self.group.clone(), name: name.to_string(), passed, detail: detail.into() });
    }

    fn eq<T: PartialEq + Debug>(&mut self, name: &str, got: T, want: T) {
        let detail = if got == want { format!("{got:?}") } else { format!("got {got:?}, expected {want:?}") };
        self.check(name, got == want, detail);
    }

    /// Records an error under the check's name and returns `None`.
    fn ok<T>(&mut self, name: &str, r: arrangements::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(name, false, e.to_string());
                None
            }
        }
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.group.is_empty() {
                writeln!(f, "{status}  {}: {}", c.name, c.detail)?;
            } else {
                writeln!(f, "{status}  [{}] {}: {}", c.group, c.name, c.detail)?;
            }
        }
        writeln!(f, "{} checks, {} failed", self.checks.len(), self.failed().len())
    }
}

fn torus(n: usize, hs: &[(&[i64], i64, i64)]) -> TorusArrangement {
    let hs = hs.iter().map(|(a, p, q)| Hyperplane::from_i64(a, *p, *q).expect("valid hyperplane")).collect();
    TorusArrangement::new(n, hs).expect("valid arrangement")
}

fn euclid(n: usize, hs: &[(&[i64], i64)]) -> EuclidArrangement {
    let hs = hs.iter().map(|(a, b)| Hyperplane::from_i64(a, *b, 1).expect("valid hyperplane")).collect();
    EuclidArrangement::new(n, hs).expect("valid arrangement")
}

fn poly(c: &[i64]) -> UniPolynomial<i64> {
    UniPolynomial::from_coeffs(c.to_vec())
}

fn ab(s: &str) -> P {
    parse_ab(s).expect("valid ab-polynomial")
}

fn cd(s: &str) -> CdPolynomial<i64> {
    parse_cd(s).expect("valid cd-polynomial")
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn builtin() -> Suite {
    let mut s = Suite::default();
    two_lines(&mut s);
    three_lines(&mut s);
    unit_cube(&mut s);
    central(&mut s);
    graphs(&mut s);
    identities(&mut s);
    cubical(&mut s);
    quotients(&mut s);
    s
}

fn two_lines(s: &mut Suite) {
    s.group("two lines on the 2-torus");
    let a = torus(2, &[(&[-2, 1], 0, 1), (&[1, -2], 0, 1)]);
    let Some(p) = s.ok("poset", build_poset(&a)) else { return };
    s.eq("levels", p.level_sizes(), vec![1, 2, 3, 1]);
    s.eq("characteristic polynomial", p.char_poly(), poly(&[3, -2, 1]));
    s.eq("regions", p.region_count(), Ok(3));
    s.eq("grid points at q = 3", a.lattice_point_count(3) as i64, p.char_poly().eval(&3));
    let corners = regularity_checks(&a, &p).into_iter().find(|c| c.name == "corners");
    s.check("not regular", corners.as_ref().is_some_and(|c| !c.passed), corners.map(|c| c.detail).unwrap_or_default());
}

fn three_lines(s: &mut Suite) {
    s.group("three lines on the 2-torus");
    let a = torus(2, &[(&[-3, 1], 0, 1), (&[1, -2], 0, 1), (&[0, 1], 1, 5)]);
    let Some(p) = s.ok("poset", build_poset(&a)) else { return };
    if let Some((f, h)) = s.ok("flag vectors", arrangements::poset::flag_vectors::<i64>(p.poset())) {
        s.eq("flag f", f.by_mask().to_vec(), vec![1, 3, 7, 15]);
        s.eq("flag h", h.by_mask().to_vec(), vec![1, 2, 6, 6]);
    }
    s.eq("ab-index", p.ab_index::<i64>(), Ok(ab("a^2 + 2*ba + 6*ab + 6*b^2")));
    s.eq("characteristic polynomial", p.char_poly(), poly(&[8, -3, 1]));
    if let Some(face) = s.ok("face ab-index", p.face_ab_index::<i64>()) {
        let nf = face.normal_form.map(|nf| (nf.t_coeff, nf.phi));
        s.eq("torus normal form", nf, Some((1, cd("7*dc + 8*cd"))));
    }
    s.eq("f-vector, both routes", p.f_vector(), Ok(vec![7, 15, 8]));
    if let Some(d) = s.ok("divisibility", p.divisibility_check()) {
        s.check("divisibility", d.iter().all(|x| x.ok), format!("{} entries", d.len()));
    }
    for q in [15, 30] {
        s.eq(&format!("grid points at q = {q}"), a.lattice_point_count(q) as i64, p.char_poly().eval(&(q as i64)));
    }
}

fn unit_cube(s: &mut Suite) {
    s.group("unit cube in R^3");
    let a = euclid(
        3,
        &[(&[1, 0, 0], 0), (&[1, 0, 0], 1), (&[0, 1, 0], 0), (&[0, 1, 0], 1), (&[0, 0, 1], 0), (&[0, 0, 1], 1)],
    );
    let Some(l) = s.ok("lattice", build_lattice(&a)) else { return };
    s.eq("levels", l.level_sizes(), vec![1, 6, 12, 8, 1]);
    s.eq("characteristic polynomial", l.char_poly(), poly(&[-8, 12, -6, 1]));
    let counts = l.region_counts().map(|c| (c.regions, c.bounded, c.unbounded));
    s.eq("regions, bounded, unbounded", counts, Ok((27, 1, 26)));
    s.eq("unbounded cd-index", l.unbounded_cd_index::<i64>(), Ok(cd("c^3 + 22*dc + 24*cd")));
    // per coordinate: below 0, at 0, between, at 1, above 1
    let mut by_dim = vec![0; 4];
    for code in 0..125 {
        let dim = (0..3).filter(|i| code / 5usize.pow(*i) % 5 % 2 == 0).count();
        by_dim[dim] += 1;
    }
    s.eq("f-vector", euclid_f_vector(&l), by_dim);
}

fn central(s: &mut Suite) {
    s.group("central arrangements");
    let axes = euclid(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
    let three = euclid(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, -1], 0)]);
    for (name, a, want) in [("axes", axes, "c^2 + 2*d"), ("three lines", three, "c^2 + 4*d")] {
        let Some(l) = s.ok(name, build_lattice(&a)) else { continue };
        s.eq(&format!("{name} cd-index"), l.central_face_cd_index::<i64>(), Ok(cd(want)));
        fan_f_vector_routes(s, name, &l);
    }
}

/// Face counts of a central arrangement read off its cd-index and counted
/// flat by flat.
fn fan_f_vector_routes(s: &mut Suite, name: &str, l: &IntersectionLattice<i64>) {
    let n = l.dim();
    let Some(c) = s.ok(&format!("{name} cd-index"), l.central_face_cd_index::<i64>()) else { return };
    let Some(f) = s.ok(&format!("{name} flag f"), FlagVector::from_ab(&c.to_ab(), n + 1)) else { return };
    let f = f.h_to_f();
    let mut from_cd = vec![1];
    from_cd.extend((1..=n).map(|i| *f.get_mask(1 << (i - 1))));
    s.eq(&format!("{name} f-vector, both routes"), from_cd, euclid_f_vector(l));
}

fn graphs(s: &mut Suite) {
    s.group("graphs");
    let cases = [
        ("K2", SimpleGraph::complete(2), poly(&[0, -1, 1]), 1),
        ("K3", SimpleGraph::complete(3), poly(&[0, 2, -3, 1]), 2),
        ("P3", SimpleGraph::path(3), poly(&[0, 1, -2, 1]), 1),
        ("K4", SimpleGraph::complete(4), poly(&[0, -6, 11, -6, 1]), 6),
    ];
    for (name, g, chi_want, regions_want) in cases {
        let n = g.n_vertices();
        let chi = chromatic_poly::<i64>(&g);
        s.eq(&format!("{name} chromatic polynomial"), chi.clone(), chi_want);
        s.eq(&format!("{name} regions"), graphical_region_count(&g), Ok(regions_want));
        let sinks: Vec<i64> = (1..=n).map(|v| count_acyclic_unique_sink(&g, v).map_or(-1, |c| c as i64)).collect();
        s.eq(&format!("{name} unique sink at each vertex"), sinks.clone(), vec![regions_want; n]);
        let toric = graphical_arrangement::<i64>(&g, true).and_then(|a| build_poset(&a)).and_then(|p| p.region_count());
        s.eq(&format!("{name} augmented toric regions"), toric, Ok(regions_want));
        let Some(total) = s.ok(&format!("{name} acyclic orientations"), count_acyclic_orientations(&g)) else {
            continue;
        };
        s.eq(&format!("{name} acyclic = (-1)^n chi(-1)"), total as i64, sign(n) * chi.eval(&-1));
        let sum: i64 = sinks.iter().sum();
        s.check(
            &format!("{name} sum of unique-sink counts = acyclic orientations"),
            sum == total as i64,
            format!("sum {sum}, acyclic {total}"),
        );
    }
}

fn identities(s: &mut Suite) {
    s.group("operator identities");
    let mut failures = Vec::new();
    for seed in 0..40 {
        let p = random_graded(seed, 5, 3);
        let rho = p.poset_rank();
        let Ok(psi) = ab_index::<i64>(&p, AbIndexMethod::FlagH) else {
            failures.push(format!("seed {seed}: ab-index"));
            continue;
        };
        let amb = P::a_minus_b_pow(rho - 1);
        let z = |k| amb.scale(&p.zaslavsky(k));
        let methods = AbIndexMethod::ALL.iter().all(|&m| ab_index::<i64>(&p, m).as_ref() == Ok(&psi));
        let dual = ab_index::<i64>(&p.dual(), AbIndexMethod::FlagH) == Ok(psi.reverse());
        let maps = kappa(&psi) == amb
            && beta(&psi) == z(Zaslavsky::Zb)
            && eta(&psi) == z(Zaslavsky::Z)
            && lambda_t(&psi) == z(Zaslavsky::Zt)
            && lambda_ub(&psi) == z(Zaslavsky::Zub);
        let h = rho < 2 || h_prime(&psi) == coatom_sum(&p);
        let hall = philip_hall_check(&p) == Ok(true);
        for (what, ok) in
            [("methods", methods), ("dual", dual), ("letter maps", maps), ("H'", h), ("Philip Hall", hall)]
        {
            if !ok {
                failures.push(format!("seed {seed}: {what}"));
            }
        }
    }
    s.check(
        "random graded posets",
        failures.is_empty(),
        if failures.is_empty() { "40 posets".into() } else { failures.join(", ") },
    );
    let w = ab("abba");
    s.eq("phi = omega on a word starting with a", phi(&w).ok(), Some(omega(&w).to_ab()));
}

fn coatom_sum(p: &RankedPoset) -> P {
    let mut sum = P::zero();
    for x in p.coatoms() {
        if let Ok(i) = p.interval(p.bottom(), x) {
            if let Ok(v) = ab_index::<i64>(&i, AbIndexMethod::Recursion) {
                sum += &v;
            }
        }
    }
    sum
}

fn cubical(s: &mut Suite) {
    s.group("cubical 3-torus");
    let a = torus(
        3,
        &[
            (&[1, 0, 0], 0, 1),
            (&[1, 0, 0], 1, 2),
            (&[0, 1, 0], 0, 1),
            (&[0, 1, 0], 1, 2),
            (&[0, 0, 1], 0, 1),
            (&[0, 0, 1], 1, 2),
        ],
    );
    let Some(p) = s.ok("poset", build_poset(&a)) else { return };
    let f = p.f_vector();
    s.eq("f-vector", f.clone(), Ok(vec![8, 24, 24, 8]));
    s.eq("Euler sum", f.map(|f| euler_sum(&f)), Ok(0));
    if let Some(face) = s.ok("face ab-index", p.face_ab_index::<i64>()) {
        s.check("pure cd", matches!(ab_to_cd(&face.ab), Ok(Some(_))), face.ab.to_string());
        if let Some(h) = s.ok("flag h", FlagVector::from_ab(&face.ab, 5)) {
            let full = 15;
            s.check("h symmetric", (0..=full).all(|m| h.get_mask(m) == h.get_mask(full ^ m)), "h_S = h_(complement S)");
        }
    }
    let failed: Vec<String> = regularity_checks(&a, &p).into_iter().filter(|c| !c.passed).map(|c| c.name).collect();
    s.check("regularity conditions", failed.is_empty(), failed.join(", "));
}

fn quotients(s: &mut Suite) {
    s.group("projective quotients");
    for (sphere, want) in [("c^2 + 2*d", "c^2"), ("c^2 + 4*d", "c^2 + d")] {
        s.eq(&format!("half of {sphere}"), projective_half(&cd(sphere), 1), Ok(cd(want).to_ab()));
    }
}

/// `{"sphere_cd_index": "...", "n": k}`: the exact half of a centrally
/// symmetric sphere.
pub fn sphere_file(v: &serde_json::Value) -> Result<Suite, String> {
    let text = v["sphere_cd_index"].as_str().ok_or("sphere_cd_index: expected a string")?;
    let n = v["n"].as_u64().ok_or("n: expected a nonnegative integer")? as usize;
    let c = parse_cd::<i64>(text).map_err(|e| format!("sphere_cd_index: {e}"))?;
    let mut s = Suite::default();
    if let Some(q) = s.ok("projective-half", projective_half(&c, n)) {
        s.check("projective-half", true, q.to_string());
    }
    Ok(s)
}

pub fn arrangement_file(a: &Arrangement, assert_regular: bool, assert_balls: bool) -> Suite {
    let mut s = Suite::default();
    match a {
        Arrangement::Euclidean(e) => euclid_checks(&mut s, e),
        Arrangement::Torus(t) => torus_checks(&mut s, t, assert_regular, assert_balls),
    }
    s
}

fn poset_checks(s: &mut Suite, p: &RankedPoset) {
    s.eq("Philip Hall", philip_hall_check(p), Ok(true));
    if let Some(psi) = s.ok("ab-index", ab_index::<i64>(p, AbIndexMethod::FlagH)) {
        let others: Vec<_> = AbIndexMethod::ALL.iter().map(|&m| ab_index::<i64>(p, m)).collect();
        s.check("ab-index methods agree", others.iter().all(|o| o.as_ref() == Ok(&psi)), psi.to_string());
        s.eq("dual reverses", ab_index::<i64>(&p.dual(), AbIndexMethod::FlagH), Ok(psi.reverse()));
    }
}

fn euclid_checks(s: &mut Suite, a: &EuclidArrangement) {
    let Some(l) = s.ok("lattice", build_lattice(a)) else { return };
    poset_checks(s, l.poset());
    let n = l.dim();
    let f = euclid_f_vector(&l);
    if let Some(c) = s.ok("region counts", l.region_counts()) {
        s.check("region counts", true, format!("{} regions, {} bounded", c.regions, c.bounded));
        s.eq("regions = top faces", f[n], c.regions);
    }
    let alternating: i64 = f.iter().enumerate().map(|(i, v)| sign(i) * v).sum();
    s.eq("Euler sum", alternating, sign(n));
    if l.is_central() {
        fan_f_vector_routes(s, "face", &l);
    } else if let Some(c) = s.ok("unbounded cd-index", l.unbounded_cd_index::<i64>()) {
        s.check("unbounded cd-index", true, c.to_string());
    }
}

fn torus_checks(s: &mut Suite, a: &TorusArrangement, assert_regular: bool, assert_balls: bool) {
    let Some(p) = s.ok("poset", build_poset(a)) else { return };
    poset_checks(s, p.poset());
    let has_points = !p.points().is_empty();
    if assert_balls {
        s.check("vertices", has_points, format!("{} zero-dimensional flats", p.points().len()));
    }
    if let Some(r) = s.ok("region count", p.region_count()) {
        s.check("region count", true, format!("{r} regions"));
    }
    grid_checks(s, a, &p);
    if has_points {
        if let Some(f) = s.ok("f-vector, both routes", p.f_vector()) {
            s.check("f-vector, both routes", true, format!("{f:?}"));
        }
        if let Some(face) = s.ok("face ab-index", p.face_ab_index::<i64>()) {
            s.check("face ab-index", true, face.ab.to_string());
        }
    }
    if assert_regular {
        for c in regularity_checks(a, &p) {
            s.check(&format!("regularity: {}", c.name), c.passed, c.detail);
        }
    }
}

/// lcm of the maximal minors and the offset denominators.
pub fn grid_period(a: &TorusArrangement) -> i64 {
    a.hyperplanes().iter().fold(a.lcm_minors(), |l, h| l.lcm(h.offset().denom()))
}

/// Grid counts against `χ(q)` at the first two multiples of the lcm of the
/// minors and the offset denominators, when the grid is small enough to
/// enumerate.
fn grid_checks(s: &mut Suite, a: &TorusArrangement, p: &ToricPoset<i64>) {
    let lcm = grid_period(a);
    let n = a.dim() as u32;
    for q in [lcm, 2 * lcm] {
        let size = (q as u64).checked_pow(n);
        if q <= 0 || size.is_none_or(|s| s > 2_000_000) {
            continue;
        }
        let count = a.lattice_point_count(q as u64) as i64;
        s.eq(&format!("grid points at q = {q}"), count, p.char_poly().eval(&q));
    }
}
