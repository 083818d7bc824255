use itertools::Itertools;

use regulus::gadgets::{
    bes_free, construction_64, example_a, example_b, example_b_threshold, full_star, gadget_h, gadget_hprime,
    gadget_hprime_split, replay_construction_64, star_plus, star_plus_witness, ExampleAVariant,
};
use regulus::util::binomial;
use regulus::{verify_certificate, Certificate, Edge, Hypergraph};

fn span(edges: &[&Edge]) -> usize {
    edges.iter().fold(Edge::empty(), |acc, e| acc.union(e)).len()
}

#[test]
fn every_construction_validates_against_its_descriptor() {
    let mut built = vec![
        full_star(8, 3).unwrap(),
        star_plus(9, 4, 2).unwrap(),
        gadget_h(4, 2).unwrap(),
        gadget_hprime(5, 2).unwrap(),
        gadget_hprime_split(5, 1, 2).unwrap(),
        example_a(7, 3, ExampleAVariant::REqK).unwrap(),
        example_a(7, 3, ExampleAVariant::REqKPlus1).unwrap(),
        example_b(8, 3, 3).unwrap(),
    ];
    built.push(construction_64(9, 4, 3, 7).unwrap());
    for (h, desc) in &built {
        desc.validate(h).unwrap_or_else(|e| panic!("{}: {e}", desc.kind));
        assert!(h.uniformity().is_some());
    }
}

#[test]
fn star_sizes() {
    for n in 3..=10 {
        for k in 1..n {
            let (h, _) = full_star(n, k).unwrap();
            assert_eq!(h.num_edges() as u128, binomial(n - 1, k - 1));
            assert!(h.edges().iter().all(|e| e.contains(0)));
        }
    }
}

#[test]
fn star_plus_adds_one_non_star_edge() {
    let (h, _) = star_plus(10, 6, 3).unwrap();
    let outside: Vec<&Edge> = h.edges().iter().filter(|e| !e.contains(0)).collect();
    assert_eq!(outside.len(), 1);
    assert_eq!(outside[0].to_vec(), (1..=6).collect::<Vec<_>>());
    let witness = Certificate::from_edges(&h, star_plus_witness(10, 6, 3).unwrap(), 3);
    assert_eq!(witness.len(), 4);
    verify_certificate(&h, &witness).unwrap();
}

#[test]
fn transversal_family_size() {
    for n in 5..=9 {
        for c in 2..=3 {
            let (h, _) = example_b(n, 3, c).unwrap();
            assert_eq!(h.num_edges() as u128, c as u128 * binomial(n - c, 2));
            assert!(h.edges().iter().all(|e| e.iter().filter(|&v| v < c).count() == 1));
        }
    }
    assert_eq!(example_b_threshold(3, 2), 8);
}

#[test]
fn surgery_differs_from_the_star_by_one_or_two_edges() {
    let (star, _) = full_star(7, 3).unwrap();
    let (a, _) = example_a(7, 3, ExampleAVariant::REqK).unwrap();
    let (a1, _) = example_a(7, 3, ExampleAVariant::REqKPlus1).unwrap();
    assert_eq!(a.num_edges(), star.num_edges());
    assert_eq!(a1.num_edges(), star.num_edges() + 1);
    let missing: Vec<&Edge> = star.edges().iter().filter(|e| !a.contains_edge(e)).collect();
    assert_eq!(missing.len(), 1);
}

#[test]
fn bes_free_output_has_no_small_spans() {
    for seed in 0..10 {
        let w = bes_free(8, 3, 6, 3, seed).unwrap();
        let h: &Hypergraph = &w.graph;
        let ok = h.edges().iter().combinations(3).all(|g| span(&g) > 6);
        assert!(ok, "seed {seed}");
        assert!(w.exhaustively_verified);
        let again = bes_free(8, 3, 6, 3, seed).unwrap();
        assert_eq!(again.graph, w.graph);
    }
}

#[test]
fn construction_replay_refutes() {
    for seed in 0..4 {
        let (h, _) = construction_64(10, 4, 3, seed).unwrap();
        let replay = replay_construction_64(&h, 4, 3).unwrap();
        assert!(replay.refutes_all(), "seed {seed}: {replay:?}");
    }
}

#[test]
fn hprime_splits_share_edge_count() {
    for split in 1..=3 {
        let (h, _) = gadget_hprime_split(5, 1, split).unwrap();
        assert_eq!(h.num_edges(), 8);
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(full_star(3, 0).is_err());
    assert!(star_plus(9, 4, 3).is_err());
    assert!(gadget_h(3, 3).is_err());
    assert!(gadget_hprime(3, 2).is_err());
    assert!(example_b(4, 3, 1).is_err());
    assert!(example_a(4, 3, ExampleAVariant::REqK).is_err());
}
