mod common;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use regulus::extremal::{classify_3sets, count_wedges, extremal_search, is_linear, min_hitting_family, SearchOptions};
use regulus::gadgets::full_star;
use regulus::regdetect::brute_force_regular;
use regulus::util::binomial;
use regulus::{find_regular, Edge, Hypergraph, SolverBudget};

use common::{perturbed_star, wedge_oracle};

/// Largest subfamily of `K_n^(k)` without an `r`-regular subgraph, by listing every subfamily.
fn ex_oracle(n: usize, k: usize, r: usize) -> usize {
    let all: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    (0..1u32 << all.len())
        .filter_map(|mask| {
            let edges = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.clone());
            let h = Hypergraph::new(n, edges).unwrap();
            brute_force_regular(&h, r).unwrap().is_none().then(|| h.num_edges())
        })
        .max()
        .unwrap()
}

#[test]
fn search_matches_subset_enumeration() {
    for (n, k, r) in [(4, 2, 2), (5, 2, 2), (5, 2, 3), (4, 3, 2), (4, 3, 3), (5, 3, 3), (5, 4, 2)] {
        let rep = extremal_search(n, k, r, SearchOptions::default()).unwrap();
        assert!(rep.complete);
        assert!(rep.witness_verified);
        assert_eq!(rep.witness.num_edges(), rep.optimum);
        assert_eq!(rep.optimum, ex_oracle(n, k, r), "ex({n},{k},{r})");
    }
}

#[test]
fn isomorph_rejection_keeps_the_optimum() {
    for (n, k, r) in [(5, 3, 2), (6, 2, 2), (6, 3, 3)] {
        let plain = extremal_search(n, k, r, SearchOptions::default()).unwrap();
        let reduced = extremal_search(
            n,
            k,
            r,
            SearchOptions {
                isomorph_reject: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(plain.optimum, reduced.optimum);
        assert!(reduced.nodes <= plain.nodes);
    }
}

#[test]
fn optimum_is_at_least_the_star() {
    for n in 4..=6 {
        for r in 2..=3 {
            let rep = extremal_search(n, 3, r, SearchOptions::default()).unwrap();
            assert!(rep.optimum as u128 >= binomial(n - 1, 2));
            assert!(find_regular(&rep.witness, r, SolverBudget::unbounded()).unwrap().is_none());
        }
    }
}

#[test]
fn wedge_counts_match_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let h = perturbed_star(&mut rng, 9, 4, 0.2, 3);
        for (v, r) in [(0, 2), (0, 4), (3, 2)] {
            let w = count_wedges(&h, v, r).unwrap();
            assert_eq!(w.per_edge, wedge_oracle(&h, v, r));
        }
    }
}

#[test]
fn three_set_classes_partition_and_count() {
    let (star, _) = full_star(14, 5).unwrap();
    let missing = Edge::from_vertices([0, 1, 2, 3, 4]);
    let h = Hypergraph::new(14, star.edges().iter().filter(|e| **e != missing).map(|e| e.to_vec())).unwrap();
    let c = classify_3sets(&h, 0).unwrap();
    assert_eq!(c.good.len() + c.bad.len(), binomial(13, 3) as usize);
    assert_eq!(c.h_tilde, 1);
    assert_eq!(c.threshold, binomial(14 - 9, 1));
    // One missing edge already reaches the threshold of 5, so its 3-sets are bad.
    let expected: Vec<[usize; 3]> = (1..=4).combinations(3).map(|t| [t[0], t[1], t[2]]).collect();
    assert_eq!(c.bad, expected);
}

#[test]
fn linearity() {
    let fano = Hypergraph::new(7, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]).unwrap();
    assert!(is_linear(&fano));
    let (star, _) = full_star(5, 3).unwrap();
    assert!(!is_linear(&star));
}

#[test]
fn hitting_families_hit() {
    let rep = min_hitting_family(4, 2).unwrap();
    assert_eq!(rep.size, 3);
    assert!(regulus::patterns::check_equipartition_hitting(4, 2, &rep.family).unwrap());
}
