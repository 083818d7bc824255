//! Greedy hypergraphs with no `b` edges on `a` or fewer vertices.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{invalid, GadgetError};
use crate::hypercore::{Edge, Hypergraph};
use crate::util::binomial;

/// Largest number of `b`-subsets [`verify_bes_free`] will scan.
pub const BES_VERIFY_LIMIT: u128 = 50_000_000;

/// A `k`-uniform hypergraph in which no `b` edges span `a` or fewer vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BesFreeWitness {
    pub graph: Hypergraph,
    pub a: usize,
    pub b: usize,
    pub seed: u64,
    /// Set when an exhaustive scan of all `b`-subsets confirmed the property.
    pub exhaustively_verified: bool,
}

/// Is there a set of `need` more edges from `edges[start..]` whose union with
/// `span` has at most `a` vertices?
fn small_span_extension(edges: &[Edge], start: usize, span: &Edge, need: usize, a: usize) -> bool {
    if need == 0 {
        return span.len() <= a;
    }
    (start..edges.len()).any(|i| {
        let grown = span.union(&edges[i]);
        grown.len() <= a && small_span_extension(edges, i + 1, &grown, need - 1, a)
    })
}

/// Randomized greedy: visits every `k`-subset of `0..n` in a seeded shuffle and
/// keeps one whenever no `b` edges of the result would span `a` or fewer
/// vertices. Only subsets containing the new edge need checking. The result is
/// maximal for the visiting order and depends only on the seed.
pub fn bes_free(n: usize, k: usize, a: usize, b: usize, seed: u64) -> Result<BesFreeWitness, GadgetError> {
    if k == 0 || a <= k || b < 2 {
        return invalid(format!("bes-free needs a > k >= 1 and b > 1, got k={k}, a={a}, b={b}"));
    }
    let mut candidates: Vec<Edge> = (0..n).combinations(k).map(Edge::from_vertices).collect();
    candidates.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut kept: Vec<Edge> = Vec::new();
    for cand in candidates {
        if !small_span_extension(&kept, 0, &cand, b - 1, a) {
            kept.push(cand);
        }
    }
    let graph = Hypergraph::from_edge_set(n, kept);
    let exhaustively_verified = verify_bes_free(&graph, a, b) == Some(true);
    Ok(BesFreeWitness {
        graph,
        a,
        b,
        seed,
        exhaustively_verified,
    })
}

/// Scans every `b`-subset of edges and reports whether none spans `a` or fewer
/// vertices. `None` when there are more than [`BES_VERIFY_LIMIT`] subsets.
pub fn verify_bes_free(h: &Hypergraph, a: usize, b: usize) -> Option<bool> {
    if binomial(h.num_edges(), b) > BES_VERIFY_LIMIT {
        return None;
    }
    let free = h.edges().iter().combinations(b).all(|group| {
        let span = group.iter().fold(Edge::empty(), |acc, e| acc.union(e));
        span.len() > a
    });
    Some(free)
}
