//! Property-based invariants across modules.

use proptest::prelude::*;
use sghom::analysis::{
    automorphisms, canonical_form, check_p_kn, is_2ec_clique, max_p_n, DEFAULT_AUTOMORPHISM_LIMIT, DEFAULT_VERTEX_LIMIT,
};
use sghom::hom::{chromatic_2ec, color_maxdeg2, color_maxdeg3, find_hom_2ec, verify_hom, Mode};
use sghom::sgraph::{read_sg, switch, write_sg, Sign, SignedGraph, SwitchSet};

fn arb_graph(max_n: usize, density: f64) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        (
            Just(n),
            Just(pairs),
            proptest::collection::vec(proptest::bool::weighted(density), len),
            proptest::collection::vec(any::<bool>(), len),
        )
            .prop_map(|(n, pairs, keep, neg)| {
                let edges = pairs
                    .into_iter()
                    .zip(keep.into_iter().zip(neg))
                    .filter(|(_, (k, _))| *k)
                    .map(|((u, v), (_, ng))| (u, v, if ng { Sign::Neg } else { Sign::Pos }));
                SignedGraph::from_edges(n, edges).unwrap()
            })
    })
}

/// Graphs of maximum degree at most `d`, by dropping edges at saturated vertices.
fn cap_degree(g: &SignedGraph, d: usize) -> SignedGraph {
    let mut deg = vec![0; g.order()];
    let mut kept = Vec::new();
    for (u, v, s) in g.edges() {
        if deg[u] < d && deg[v] < d {
            deg[u] += 1;
            deg[v] += 1;
            kept.push((u, v, s));
        }
    }
    SignedGraph::from_edges(g.order(), kept).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn switching_is_an_involution(g in arb_graph(8, 0.5), bits in any::<u8>()) {
        let set = SwitchSet::new((0..g.order()).filter(|v| bits >> v & 1 == 1));
        let twice = switch(&switch(&g, &set).unwrap(), &set).unwrap();
        prop_assert_eq!(twice, g);
    }

    #[test]
    fn sg_round_trip(g in arb_graph(9, 0.4)) {
        prop_assert_eq!(read_sg(&write_sg(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(7, 0.5), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
    }

    #[test]
    fn automorphisms_preserve_signs(g in arb_graph(7, 0.5)) {
        let group = automorphisms(&g, DEFAULT_VERTEX_LIMIT, DEFAULT_AUTOMORPHISM_LIMIT).unwrap();
        for a in group.elements.iter().chain(&group.generators) {
            for (u, v, s) in g.edges() {
                prop_assert_eq!(g.sign(a[u], a[v]), Some(s));
            }
        }
    }

    #[test]
    fn p_kn_is_monotone(g in arb_graph(9, 0.7), k in 1usize..=3) {
        prop_assume!(k <= g.order());
        match max_p_n(&g, k).unwrap() {
            None => prop_assert!(check_p_kn(&g, k, 50).unwrap().holds),
            Some(m) => {
                prop_assert!(check_p_kn(&g, k, m).unwrap().holds);
                prop_assert!(!check_p_kn(&g, k, m + 1).unwrap().holds);
                if m > 0 {
                    prop_assert!(check_p_kn(&g, k, m - 1).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn maxdeg2_colorings_verify(g in arb_graph(9, 0.4)) {
        let g = cap_degree(&g, 2);
        for mode in [Mode::TwoEdgeColored, Mode::Signed] {
            let c = color_maxdeg2(&g, mode).unwrap();
            prop_assert!(verify_hom(&g, &c.target.graph(), &c.hom).unwrap());
        }
    }

    #[test]
    fn maxdeg3_colorings_verify(g in arb_graph(12, 0.4)) {
        let g = cap_degree(&g, 3);
        let star = sghom::constructions::build_gadget(sghom::constructions::GadgetId::Sp9Star).graph;
        let hom = color_maxdeg3(&g).unwrap();
        prop_assert!(verify_hom(&g, &star, &hom).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cliques_need_all_their_vertices(g in arb_graph(5, 0.8)) {
        if is_2ec_clique(&g).holds {
            let r = chromatic_2ec(&g, g.order()).unwrap();
            prop_assert_eq!(r.value, g.order());
        }
    }

    #[test]
    fn chromatic_witness_is_tight(g in arb_graph(5, 0.5)) {
        let r = chromatic_2ec(&g, 5).unwrap();
        prop_assert!(verify_hom(&g, &r.target, &r.homomorphism).unwrap());
        prop_assert_eq!(r.target.order(), r.value);
        // nothing on fewer vertices works: spot-check the complete graphs of the previous order
        if r.value >= 1 {
            for t in sghom::enumerate::complete_targets_2ec(r.value - 1) {
                prop_assert!(find_hom_2ec(&g, &t).is_none());
            }
        }
    }
}
