#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use regulus::{Edge, Hypergraph};

/// `m` distinct random `k`-subsets of `0..n` (fewer if `C(n,k) < m`).
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, k: usize, m: usize) -> Hypergraph {
    let total = regulus::util::binomial(n, k) as usize;
    let mut edges = BTreeSet::new();
    while edges.len() < m.min(total) {
        let mut e: Vec<usize> = sample(rng, n, k).into_vec();
        e.sort_unstable();
        edges.insert(e);
    }
    Hypergraph::new(n, edges).unwrap()
}

/// Pairs of edges that are disjoint and together cover every vertex.
pub fn perfect_double_matchings(h: &Hypergraph) -> Vec<(usize, usize)> {
    let all: Vec<usize> = (0..h.n()).collect();
    (0..h.num_edges())
        .tuple_combinations()
        .filter(|&(i, j)| {
            let mut u: Vec<usize> = h[i].iter().chain(h[j].iter()).collect();
            u.sort_unstable();
            u == all
        })
        .collect()
}

/// Wedges per edge avoiding `v`, computed by listing every non-edge through `v`
/// and comparing against every edge avoiding it.
pub fn wedge_oracle(h: &Hypergraph, v: usize, r: usize) -> Vec<(usize, u128)> {
    let k = h.uniformity().unwrap();
    let kp = k / r;
    let tilde: Vec<Vec<usize>> = (0..h.n())
        .filter(|&u| u != v)
        .combinations(k - 1)
        .map(|mut c| {
            c.push(v);
            c
        })
        .filter(|c| !h.contains_edge(&Edge::from_vertices(c.iter().copied())))
        .collect();
    h.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.contains(v))
        .map(|(i, e)| {
            let count = tilde
                .iter()
                .filter(|f| f.iter().filter(|&&x| e.contains(x)).count() == k - kp)
                .count();
            (i, count as u128)
        })
        .collect()
}

/// Full star at 0, with each star edge dropped with probability `drop`, plus
/// `extra` random edges avoiding 0.
pub fn perturbed_star(rng: &mut ChaCha8Rng, n: usize, k: usize, drop: f64, extra: usize) -> Hypergraph {
    let mut edges: BTreeSet<Vec<usize>> = (1..n)
        .combinations(k - 1)
        .map(|mut c| {
            c.insert(0, 0);
            c
        })
        .filter(|_| !rng.gen_bool(drop))
        .collect();
    for _ in 0..extra {
        let mut e: Vec<usize> = sample(rng, n - 1, k).into_iter().map(|x| x + 1).collect();
        e.sort_unstable();
        edges.insert(e);
    }
    Hypergraph::new(n, edges).unwrap()
}
