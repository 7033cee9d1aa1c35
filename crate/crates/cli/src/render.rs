//! SVG of a 2-torus arrangement on the fundamental domain `[0, 1]²`.
//! Output depends only on the arrangement, byte for byte.

use std::fmt::Write;

use arrangements::torus::build_poset;
use arrangements::{Error, Hyperplane, TorusArrangement};
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

type Q = Ratio<i64>;
type Point = (Q, Q);

const SIZE: f64 = 400.0;
const MARGIN: f64 = 20.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// The part of `a·x = c` inside the closed unit square, if it is a
/// segment.
fn clip(a: &[i64], c: Q) -> Option<(Point, Point)> {
    let (a1, a2) = (q(a[0]), q(a[1]));
    let mut hits: Vec<Point> = Vec::new();
    for side in [q(0), q(1)] {
        if !a2.is_zero() {
            let y = (c - a1 * side) / a2;
            if y >= q(0) && y <= q(1) {
                hits.push((side, y));
            }
        }
        if !a1.is_zero() {
            let x = (c - a2 * side) / a1;
            if x >= q(0) && x <= q(1) {
                hits.push((x, side));
            }
        }
    }
    hits.sort();
    hits.dedup();
    match hits[..] {
        [p, r] => Some((p, r)),
        _ => None,
    }
}

/// Every translate `a·x = b + k` meeting the square in a segment. Segments
/// on the edges `x = 1` and `y = 1` repeat the ones on `x = 0`, `y = 0`.
pub fn segments(h: &Hyperplane) -> Vec<(Point, Point)> {
    let a = h.normal();
    let b = *h.offset();
    let lo: i64 = a.iter().filter(|&&x| x < 0).sum();
    let hi: i64 = a.iter().filter(|&&x| x > 0).sum();
    let first = (q(lo) - b).floor().to_integer();
    let last = (q(hi) - b).ceil().to_integer();
    (first..=last)
        .filter_map(|k| clip(a, b + q(k)))
        .filter(|(p, r)| !(p.0 == q(1) && r.0 == q(1)) && !(p.1 == q(1) && r.1 == q(1)))
        .collect()
}

fn px(x: Q) -> String {
    format!("{:.3}", MARGIN + x.to_f64().unwrap_or(0.0) * SIZE)
}

fn py(y: Q) -> String {
    format!("{:.3}", MARGIN + (1.0 - y.to_f64().unwrap_or(0.0)) * SIZE)
}

pub fn render_svg(a: &TorusArrangement) -> Result<String, Error> {
    if a.dim() != 2 {
        return Err(Error::UnsupportedDimension(a.dim()));
    }
    let p = build_poset(a)?;
    let side = SIZE + 2.0 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    let _ = writeln!(
        s,
        r#"  <rect class="domain" x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="none" stroke="black"/>"#
    );
    for (i, h) in a.hyperplanes().iter().enumerate() {
        let normal: Vec<String> = h.normal().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            s,
            r#"  <g class="line-system" data-normal="{}" data-offset="{}" stroke="{}" stroke-width="2">"#,
            normal.join(" "),
            h.offset(),
            PALETTE[i % PALETTE.len()]
        );
        for (u, v) in segments(h) {
            let _ = writeln!(s, r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(u.0), py(u.1), px(v.0), py(v.1));
        }
        let _ = writeln!(s, "  </g>");
    }
    for x in p.points() {
        let base = p.flat(x).map(|f| f.base().to_vec()).unwrap_or_default();
        let _ = writeln!(
            s,
            r#"  <circle class="point" cx="{}" cy="{}" r="4" fill="black"><title>{}</title></circle>"#,
            px(base[0]),
            py(base[1]),
            p.label(x)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
