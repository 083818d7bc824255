mod common;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use regulus::gadgets::{gadget_h, gadget_hprime_split};
use regulus::patterns::{
    check_equipartition_hitting, equipartitions, find_gadget_copy, find_same_union, find_sunflower,
    gadget_copy_premise, sunflower_free_family, verify_copy, SunflowerSearch,
};
use regulus::{verify_certificate, Certificate, Edge, Hypergraph};

use common::random_hypergraph;

#[test]
fn dense_graphs_hold_a_gadget_copy() {
    let premise = gadget_copy_premise(20, 2, 1, false);
    assert!(premise.attainable);
    let m = premise.threshold.ceil() as usize;
    for seed in 0..20 {
        let h = random_hypergraph(&mut ChaCha8Rng::seed_from_u64(seed), 20, 2, m);
        let copy = find_gadget_copy(&h, 2, 1, false).unwrap().expect("copy");
        assert!(verify_copy(&h, &copy), "seed {seed}");
    }
}

#[test]
fn dense_3_graph_holds_a_gadget_copy() {
    let premise = gadget_copy_premise(150, 3, 1, false);
    assert!(premise.attainable);
    let m = premise.threshold.ceil() as usize;
    let h = random_hypergraph(&mut ChaCha8Rng::seed_from_u64(0), 150, 3, m);
    let copy = find_gadget_copy(&h, 3, 1, false).unwrap().expect("copy");
    assert!(verify_copy(&h, &copy));
}

#[test]
fn premise_is_out_of_reach_at_small_n() {
    assert!(!gadget_copy_premise(64, 4, 2, false).attainable);
    assert!(!gadget_copy_premise(12, 3, 1, true).attainable);
}

#[test]
fn copies_carry_regular_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let h = random_hypergraph(&mut rng, 8, 3, 40);
        if let Some(copy) = find_gadget_copy(&h, 3, 1, false).unwrap() {
            assert!(verify_copy(&h, &copy));
            let cert = Certificate::from_edges(&h, copy.host_edges.clone(), 2);
            verify_certificate(&h, &cert).unwrap();
        }
    }
}

#[test]
fn embedded_template_copies_are_found() {
    let (g, _) = gadget_h(3, 1).unwrap();
    let shift = |e: &Edge| e.iter().map(|v| v + 2).collect::<Vec<_>>();
    let mut edges: Vec<Vec<usize>> = g.edges().iter().map(shift).collect();
    edges.extend([vec![0, 1, 2], vec![0, 1, 9], vec![1, 8, 9]]);
    let host = Hypergraph::new(10, edges).unwrap();
    let copy = find_gadget_copy(&host, 3, 1, false).unwrap().expect("copy");
    assert!(verify_copy(&host, &copy));

    let (p, _) = gadget_hprime_split(4, 1, 2).unwrap();
    let copy = find_gadget_copy(&p, 4, 1, true).unwrap().expect("prime copy");
    assert!(verify_copy(&p, &copy));
}

#[test]
fn sunflowers_found_by_search_are_sunflowers() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let h = random_hypergraph(&mut rng, 8, 3, 12);
        let exists = h.edges().iter().combinations(3).any(|g| {
            let core = g[0].intersection(g[1]);
            g[0].intersection(g[2]) == core && g[1].intersection(g[2]) == core
        });
        match find_sunflower(&h, 3).unwrap() {
            SunflowerSearch::Greedy(s) | SunflowerSearch::Exhaustive(s) => assert!(s.verify(&h) && exists),
            SunflowerSearch::Absent => assert!(!exists),
            SunflowerSearch::Undetermined => panic!("small family left undetermined"),
        }
    }
}

#[test]
fn free_family_has_lower_bound_size() {
    for k in 1..=3 {
        for p in 2..=4 {
            let h = sunflower_free_family(k, p).unwrap();
            assert_eq!(h.num_edges(), (p - 1).pow(k as u32));
        }
    }
}

#[test]
fn same_union_needs_disjoint_pairs() {
    let fano = Hypergraph::new(7, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]).unwrap();
    assert!(find_same_union(&fano).is_none());
}

#[test]
fn equipartition_hitting_matches_direct_check() {
    let parts = equipartitions(6, 3).unwrap();
    let pairs: Vec<Edge> = (0..6).combinations(2).map(Edge::from_vertices).collect();
    for family in pairs.iter().cloned().combinations(4).take(300) {
        let direct = parts.iter().all(|p| p.iter().any(|part| family.contains(part)));
        assert_eq!(check_equipartition_hitting(6, 3, &family).unwrap(), direct);
    }
}
