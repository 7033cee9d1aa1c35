use arrangements::ncpoly::AbPolynomial;
use arrangements::poset::{ab_index, flag_vectors, philip_hall_check, random_graded, AbIndexMethod, FlagVector};
use arrangements::RankedPoset;
use proptest::prelude::*;

fn poset() -> impl Strategy<Value = RankedPoset> {
    (any::<u64>(), 1usize..=5, 1usize..=4).prop_map(|(seed, rank, width)| random_graded(seed, rank, width))
}

proptest! {
    #[test]
    fn flag_f_h_round_trip(p in poset()) {
        let (f, h) = flag_vectors::<i64>(&p).unwrap();
        prop_assert_eq!(h.h_to_f(), f.clone());
        prop_assert_eq!(f.f_to_h(), h.clone());
        prop_assert_eq!(FlagVector::from_ab(&h.to_ab(), p.poset_rank()).unwrap(), h);
    }

    #[test]
    fn ab_index_methods_agree(p in poset()) {
        let x = ab_index::<i64>(&p, AbIndexMethod::FlagH).unwrap();
        prop_assert_eq!(ab_index::<i64>(&p, AbIndexMethod::ChainWeights).unwrap(), x.clone());
        prop_assert_eq!(ab_index::<i64>(&p, AbIndexMethod::Recursion).unwrap(), x.clone());
        prop_assert_eq!(ab_index::<i64>(&p.dual(), AbIndexMethod::Recursion).unwrap(), x.reverse());
    }

    #[test]
    fn adjoining_a_bottom_multiplies_by_a(p in poset()) {
        let x = ab_index::<i64>(&p, AbIndexMethod::FlagH).unwrap();
        let y = ab_index::<i64>(&p.adjoin_bottom(), AbIndexMethod::FlagH).unwrap();
        prop_assert_eq!(y, &AbPolynomial::a() * &x);
    }

    #[test]
    fn mobius_and_philip_hall(p in poset()) {
        prop_assert!(philip_hall_check(&p).unwrap());
        let row = p.mobius_row(p.bottom());
        let total: i64 = (0..p.len()).filter(|&x| p.leq(p.bottom(), x)).map(|x| row[x]).sum();
        prop_assert_eq!(total, 0);
    }

    #[test]
    fn json_round_trip(p in poset()) {
        prop_assert_eq!(RankedPoset::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn rank_selection_restricts_flag_f(p in poset(), mask in 0usize..16) {
        let rho = p.poset_rank();
        let s: Vec<usize> = (1..rho).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let q = p.rank_selection(&s).unwrap();
        let (f, _) = flag_vectors::<i64>(&p).unwrap();
        let (g, _) = flag_vectors::<i64>(&q).unwrap();
        // f_T(P(S)) = f_{S_T}(P), where S_T re-indexes T through S
        for m in 0..1usize << s.len() {
            let t: Vec<usize> = (0..s.len()).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect();
            let orig: Vec<usize> = t.iter().map(|&i| s[i - 1]).collect();
            prop_assert_eq!(g.get(&t).unwrap(), f.get(&orig).unwrap());
        }
    }
}
