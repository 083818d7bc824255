use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regulus::gadgets::{example_a, example_b, full_star, gadget_h, gadget_hprime, star_plus, ExampleAVariant};
use regulus::regdetect::{
    brute_force_regular, find_regular, find_regular_parallel, find_regular_through, verify_certificate, Certificate,
    DetectError, Detection, SolverBudget,
};
use regulus::Hypergraph;

fn solve(h: &Hypergraph, r: usize) -> Detection {
    find_regular(h, r, SolverBudget::unbounded()).unwrap()
}

fn fano() -> Hypergraph {
    Hypergraph::new(
        7,
        vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ],
    )
    .unwrap()
}

fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, k: usize, m: usize) -> Hypergraph {
    let mut edges = std::collections::BTreeSet::new();
    let total = regulus::util::binomial(n, k) as usize;
    while edges.len() < m.min(total) {
        let mut e: Vec<usize> = rand::seq::index::sample(rng, n, k).into_vec();
        e.sort_unstable();
        edges.insert(e);
    }
    Hypergraph::new(n, edges).unwrap()
}

#[test]
fn fano_plane_is_three_regular() {
    let h = fano();
    let det = solve(&h, 3);
    let cert = det.certificate().expect("Fano plane is 3-regular");
    assert_eq!(cert.edge_indices.len(), 7);
    assert_eq!(verify_certificate(&h, cert), Ok(()));
    // The four lines avoiding a point cover the other six twice each.
    let two = solve(&h, 2);
    assert_eq!(two.certificate().unwrap().covered.len(), 6);
    assert!(brute_force_regular(&h, 2).unwrap().is_some());
}

#[test]
fn two_triples_sharing_a_vertex() {
    let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
    assert_eq!(solve(&h, 2), Detection::NoneExists);
    assert_eq!(brute_force_regular(&h, 2).unwrap(), None);
}

#[test]
fn full_star_small_matches_subset_enumeration() {
    let (h, _) = full_star(6, 3).unwrap();
    assert_eq!(h.num_edges(), 10);
    for r in 2..=4 {
        assert_eq!(solve(&h, r), Detection::NoneExists);
        assert_eq!(brute_force_regular(&h, r).unwrap(), None);
    }
}

#[test]
fn star_plus_instances_are_found() {
    for (n, k, r) in [(8, 3, 3), (10, 4, 4), (7, 3, 3), (7, 4, 2)] {
        let (h, _) = star_plus(n, k, r).unwrap();
        let det = solve(&h, r);
        let cert = det.certificate().unwrap_or_else(|| panic!("star-plus {n} {k} {r}"));
        assert_eq!(verify_certificate(&h, cert), Ok(()));
    }
}

#[test]
fn star_surgery_examples() {
    let (a, _) = example_a(6, 3, ExampleAVariant::REqK).unwrap();
    assert_eq!(solve(&a, 3), Detection::NoneExists);
    let (b, _) = example_a(6, 3, ExampleAVariant::REqKPlus1).unwrap();
    assert_eq!(solve(&b, 4), Detection::NoneExists);
    assert!(solve(&b, 3).is_found());
}

#[test]
fn transversal_family_verdicts() {
    let (h, _) = example_b(7, 3, 2).unwrap();
    assert_eq!(solve(&h, 9), Detection::NoneExists);
    assert!(solve(&h, 2).is_found());
    assert_eq!(brute_force_regular(&h, 9).unwrap(), None);
    assert!(brute_force_regular(&h, 2).unwrap().is_some());
}

#[test]
fn gadgets_hold_regular_subgraphs() {
    // Union of edge-disjoint perfect double matchings.
    for k in 2..=5 {
        for l in 0..k {
            let (h, _) = gadget_h(k, l).unwrap();
            for r in 2..=(1usize << l) {
                let det = solve(&h, r);
                assert!(det.is_found(), "H({k},{l}) r={r}");
                if h.num_edges() <= 25 {
                    assert!(brute_force_regular(&h, r).unwrap().is_some());
                }
            }
        }
    }
    let (hp, _) = gadget_hprime(4, 1).unwrap();
    let det = solve(&hp, 4);
    assert_eq!(det.certificate().unwrap().covered.len(), 8);
}

#[test]
fn rejects_small_r_and_bad_budget() {
    let h = fano();
    assert_eq!(find_regular(&h, 1, SolverBudget::unbounded()), Err(DetectError::RegularityTooSmall(1)));
    assert_eq!(find_regular(&h, 0, SolverBudget::unbounded()), Err(DetectError::RegularityTooSmall(0)));
    assert_eq!(find_regular(&h, 3, SolverBudget::nodes(0)), Err(DetectError::InvalidBudget));
}

#[test]
fn node_budget_is_reported() {
    let (h, _) = full_star(9, 4).unwrap();
    match find_regular(&h, 2, SolverBudget::nodes(3)).unwrap() {
        Detection::BudgetExhausted { nodes } => assert_eq!(nodes, 4),
        other => panic!("expected budget exhaustion, got {other:?}"),
    }
}

#[test]
fn non_uniform_input_is_accepted() {
    // {0,1},{0,2},{1,2} is 2-regular; a stray triple does not change that.
    let h = Hypergraph::new(4, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![1, 2, 3]]).unwrap();
    let cert = solve(&h, 2).certificate().cloned().unwrap();
    assert_eq!(verify_certificate(&h, &cert), Ok(()));
}

#[test]
fn forced_edge_search() {
    let h = Hypergraph::new(4, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![2, 3]]).unwrap();
    let idx = h.index_of(&regulus::Edge::from_vertices([2, 3])).unwrap();
    assert_eq!(find_regular_through(&h, 2, idx, SolverBudget::unbounded()).unwrap(), Detection::NoneExists);
    assert!(find_regular_through(&h, 2, 0, SolverBudget::unbounded()).unwrap().is_found());
}

#[test]
fn parallel_matches_across_worker_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let h = random_hypergraph(&mut rng, 8, 3, 14);
        let one = find_regular_parallel(&h, 2, SolverBudget::unbounded(), 1).unwrap();
        let four = find_regular_parallel(&h, 2, SolverBudget::unbounded(), 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.is_found(), solve(&h, 2).is_found());
        if let Some(c) = one.certificate() {
            assert_eq!(verify_certificate(&h, c), Ok(()));
        }
    }
}

#[test]
fn agrees_with_oracle_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.gen_range(4..=9);
        let k = rng.gen_range(2..=4.min(n - 1));
        let m = rng.gen_range(1..=16);
        let r = rng.gen_range(2..=4);
        let h = random_hypergraph(&mut rng, n, k, m);
        let fast = solve(&h, r);
        let slow = brute_force_regular(&h, r).unwrap();
        assert_eq!(fast.is_found(), slow.is_some(), "{h:?} r={r}");
        if let Some(c) = fast.certificate() {
            assert_eq!(verify_certificate(&h, c), Ok(()));
        }
    }
}

fn arb_instance() -> impl Strategy<Value = (Hypergraph, usize)> {
    (4usize..9, 2usize..4, 2usize..4).prop_flat_map(|(n, k, r)| {
        prop::collection::btree_set(prop::collection::btree_set(0..n, k), 1..14).prop_map(move |edges| {
            let h = Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect::<Vec<_>>())).unwrap();
            (h, r)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn found_certificates_verify((h, r) in arb_instance()) {
        if let Detection::Found(c) = solve(&h, r) {
            prop_assert_eq!(verify_certificate(&h, &c), Ok(()));
        }
    }

    #[test]
    fn adding_edges_keeps_a_found_subgraph((h, r) in arb_instance(), extra in prop::collection::vec(prop::collection::btree_set(0usize..4, 2..4), 0..4)) {
        if let Detection::Found(_) = solve(&h, r) {
            let more: Vec<regulus::Edge> = extra
                .into_iter()
                .map(regulus::Edge::from_vertices)
                .filter(|e| !h.contains_edge(e))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let bigger = h.with_edges(more).unwrap();
            prop_assert!(solve(&bigger, r).is_found());
        }
    }

    #[test]
    fn repeated_runs_are_identical((h, r) in arb_instance(), cap in 1u64..200) {
        let a = find_regular(&h, r, SolverBudget::nodes(cap)).unwrap();
        let b = find_regular(&h, r, SolverBudget::nodes(cap)).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn certificate_from_solver_round_trips_through_text() {
    let h = fano();
    let cert = solve(&h, 3).certificate().cloned().unwrap();
    let back = Certificate::parse(&cert.to_cert_string()).unwrap();
    assert_eq!(back, cert);
}
