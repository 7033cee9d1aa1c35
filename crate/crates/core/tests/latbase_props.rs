use arrangements::latbase::{flat_contains, flat_intersect, integer_kernel, snf, Matrix, ToricFlat};
use num_rational::Ratio;
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Matrix<i64>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, c), r).prop_map(move |rows| Matrix::from_rows(c, rows))
    })
}

/// A toric line `a·x + b·y ≡ p/q`.
fn line() -> impl Strategy<Value = ToricFlat<i64>> {
    ((-4i64..=4, -4i64..=4), 0i64..6, 1i64..6)
        .prop_filter("nonzero normal", |((a, b), _, _)| *a != 0 || *b != 0)
        .prop_map(|((a, b), p, q)| {
            let g = num_integer::gcd(a, b);
            ToricFlat::hyperplane(&[a / g, b / g], &Ratio::new(p, q)).remove(0)
        })
}

proptest! {
    #[test]
    fn smith_form(m in matrix()) {
        let s = snf(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert_eq!(s.u.det().abs(), 1);
        prop_assert_eq!(s.v.det().abs(), 1);
        let ds = s.divisors();
        prop_assert!(ds.iter().all(|&d| d > 0));
        for w in ds.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn kernel_is_annihilated(m in matrix()) {
        let k = integer_kernel(&m);
        prop_assert_eq!(k.len(), m.ncols() - snf(&m).rank);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    /// Two toric lines with normals `n₁, n₂` meet in `|det(n₁, n₂)|` points.
    #[test]
    fn lines_meet_in_det_points(f in line(), g in line()) {
        let comps = flat_intersect(&f, &g).unwrap();
        let (ef, _) = f.equations();
        let (eg, _) = g.equations();
        let det = (ef[0][0] * eg[0][1] - ef[0][1] * eg[0][0]).abs();
        if det != 0 {
            prop_assert_eq!(comps.len() as i64, det);
        }
        for c in &comps {
            prop_assert!(flat_contains(&f, c).unwrap());
            prop_assert!(flat_contains(&g, c).unwrap());
            prop_assert!(f.contains_point(c.base()) && g.contains_point(c.base()));
        }
        prop_assert_eq!(flat_intersect(&g, &f).unwrap(), comps);
    }

    #[test]
    fn flat_json_round_trip(f in line()) {
        prop_assert_eq!(ToricFlat::from_json(&f.to_json()).unwrap(), f);
    }
}
