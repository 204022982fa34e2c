mod common;

use bo_core::critical::{build_m_delta, build_z_delta, canonical_form, find_obstructions, CriticalGraph, Obstruction};
use bo_core::exchange::{has_exchange_ordering, is_k_base_orderable};
use bo_core::json::{matroid_from_str, to_string_pretty};
use bo_core::pipeline::matroid_id;
use bo_core::{ElementSet, Matroid};
use common::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn sparse_paving() -> impl Strategy<Value = Matroid> {
    (2usize..=4, 0usize..=3, any::<u64>()).prop_map(|(r, extra, seed)| {
        let mut rng = StdRng::seed_from_u64(seed);
        random_sparse_paving(&mut rng, r, r + 2 + extra, 10)
    })
}

fn orientation(s: usize, t: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
    proptest::collection::vec(proptest::collection::vec(any::<bool>(), t), s)
}

fn critical_graph() -> impl Strategy<Value = CriticalGraph> {
    (2usize..=4, 2usize..=4)
        .prop_flat_map(|(s, t)| orientation(s, t).prop_map(move |o| CriticalGraph::new(s + t - 1, o)))
        .prop_filter_map("source or sink", Result::ok)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_roundtrip_is_stable(m in sparse_paving()) {
        let s = to_string_pretty(&m);
        let back = matroid_from_str(&s).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(to_string_pretty(&back), s);
        prop_assert_eq!(matroid_id(&back), matroid_id(&m));
    }

    #[test]
    fn duality_laws(m in sparse_paving()) {
        let d = m.dual();
        prop_assert_eq!(d.dual(), m.clone());
        prop_assert_eq!(d.r(), m.n() - m.r());
        for e in 0..m.n() {
            prop_assert_eq!(m.delete_element(e).unwrap().dual(), d.contract_element(e).unwrap());
        }
        prop_assert_eq!(is_k_base_orderable(&m, 1).unwrap(), is_k_base_orderable(&d, 1).unwrap());
    }

    #[test]
    fn rank_matches_bases(m in sparse_paving(), x in any::<u64>()) {
        let bases = oracle_bases(&m);
        let x = x & ((1u64 << m.n()) - 1);
        prop_assert_eq!(m.rank_of(ElementSet(x)), oracle_rank(&bases, x));
        prop_assert_eq!(m.bases().count(), bases.len());
    }

    #[test]
    fn matching_agrees_with_bijections(m in sparse_paving(), i in any::<usize>(), j in any::<usize>()) {
        let bases: Vec<ElementSet> = m.bases().collect();
        let (a, b) = (bases[i % bases.len()], bases[j % bases.len()]);
        let fast = has_exchange_ordering(&m, a, b).unwrap().is_ordering();
        prop_assert_eq!(fast, oracle_pair_orderable(&oracle_bases(&m), a.0, b.0, 1));
    }

    #[test]
    fn canonical_form_ignores_labels(d in critical_graph(), rot_r in 0usize..4, rot_c in 0usize..4) {
        let (s, t) = (d.s, d.t);
        let o: Vec<Vec<bool>> = (0..s)
            .map(|i| (0..t).map(|j| d.orientation[(i + rot_r) % s][(j + rot_c) % t]).collect())
            .collect();
        let moved = CriticalGraph::new(d.r, o).unwrap();
        prop_assert_eq!(canonical_form(&moved), canonical_form(&d));
        prop_assert!(moved.is_isomorphic(&d));
    }

    #[test]
    fn reversal_dualizes(d in critical_graph()) {
        let m = build_m_delta(&d).unwrap();
        let rev = build_m_delta(&d.reversed()).unwrap();
        prop_assert!(m.dual().same_structure(&rev));
        prop_assert!(m.is_basis(d.a()).unwrap() && m.is_basis(d.b()).unwrap());
    }

    #[test]
    fn obstructions_and_validity(d in critical_graph()) {
        let obs = find_obstructions(&d);
        prop_assert_eq!(obs.is_empty(), !oracle_has_obstruction(&d.orientation));
        let z = build_z_delta(&d).unwrap();
        prop_assert_eq!(z.merged.validate().is_ok(), obs.is_empty());
        let rev = d.reversed();
        for o in &obs.all {
            let flipped = Obstruction { k_side: d.x().difference(o.k_side), l_side: d.y().difference(o.l_side) };
            prop_assert!(flipped.is_obstruction_of(&rev));
        }
    }
}
