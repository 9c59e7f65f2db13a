//! Exhaustive reference implementations checked against the fast paths.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sghom::constructions::{build_rho, LabeledTarget};
use sghom::enumerate;
use sghom::hom::{find_hom_2ec, find_hom_signed, verify_hom, Homomorphism};
use sghom::reference::{brute_force_hom, brute_force_switch_equivalent};
use sghom::sgraph::{switch, switch_equivalent, Sign, SignedGraph, SwitchSet};

fn random_graph(rng: &mut ChaCha8Rng, n: std::ops::RangeInclusive<usize>, density: f64) -> SignedGraph {
    let n = rng.gen_range(n);
    enumerate::random_graph(n, density, rng)
}

#[test]
fn hom_search_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut found = 0;
    for _ in 0..300 {
        let g = random_graph(&mut rng, 1..=6, 0.5);
        let h = random_graph(&mut rng, 1..=5, 0.7);
        let fast = find_hom_2ec(&g, &h);
        assert_eq!(fast.is_some(), brute_force_hom(&g, &h), "g = {:?}\nh = {:?}", g, h);
        if let Some(hom) = fast {
            found += 1;
            assert!(verify_hom(&g, &h, &hom).unwrap());
        }
    }
    // the sample exercises both outcomes
    assert!(found > 20 && found < 280, "{}", found);
}

#[test]
fn signed_search_goes_through_the_double() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 1..=6, 0.5);
        let h = random_graph(&mut rng, 1..=4, 0.7);
        let rho = build_rho(&LabeledTarget::unlabeled(h.clone())).graph;
        let signed = find_hom_signed(&g, &h);
        assert_eq!(signed.is_some(), find_hom_2ec(&g, &rho).is_some());
        if let Some(hom) = signed {
            assert!(verify_hom(&g, &h, &hom).unwrap());
        }
    }
}

#[test]
fn signed_search_is_switching_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n..=n, 0.5);
        let h = random_graph(&mut rng, 1..=4, 0.8);
        let set = SwitchSet::new((0..n).filter(|_| rng.gen()));
        let switched = switch(&g, &set).unwrap();
        assert_eq!(find_hom_signed(&g, &h).is_some(), find_hom_signed(&switched, &h).is_some());
    }
}

#[test]
fn switch_equivalence_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..200 {
        let n = rng.gen_range(1..=10);
        let g1 = random_graph(&mut rng, n..=n, 0.4);
        // half the time a genuine switch of g1, otherwise a re-signing
        let g2 = if round % 2 == 0 {
            switch(&g1, &SwitchSet::new((0..n).filter(|_| rng.gen()))).unwrap()
        } else {
            let edges: Vec<_> = g1.edges().map(|(u, v, s)| (u, v, if rng.gen_bool(0.2) { -s } else { s })).collect();
            SignedGraph::from_edges(n, edges).unwrap()
        };
        let fast = switch_equivalent(&g1, &g2);
        assert_eq!(fast.is_some(), brute_force_switch_equivalent(&g1, &g2));
        if let Some(set) = fast {
            assert_eq!(switch(&g1, &set).unwrap(), g2);
        }
    }
}

#[test]
fn explicit_maps_verify() {
    let c4 = SignedGraph::cycle(&[Sign::Neg; 4]);
    let edge = SignedGraph::path(&[Sign::Pos]);
    let hom = Homomorphism::signed(vec![0, 1, 0, 1], SwitchSet::new([1, 3]));
    assert!(verify_hom(&c4, &edge, &hom).unwrap());
    let wrong = Homomorphism::signed(vec![0, 1, 0, 1], SwitchSet::new([1]));
    assert!(!verify_hom(&c4, &edge, &wrong).unwrap());
}
