use std::collections::HashMap;

use itertools::Itertools;

use super::ExtremalError;
use crate::hypercore::{Edge, Hypergraph, Vertex};
use crate::util::binomial;

/// Wedges `(e, f)` around `v`: `e` an edge avoiding `v`, `f` a non-edge
/// through `v`, and `|e ∩ f| = k − k'` with `k' = k / r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeCount {
    pub v: Vertex,
    pub r: usize,
    pub k: usize,
    pub k_prime: usize,
    pub lambda: u128,
    /// `(edge index, wedges through it)` for every edge avoiding `v`, in edge order.
    pub per_edge: Vec<(usize, u128)>,
}

impl WedgeCount {
    /// Edges avoiding `v`.
    pub fn h_star(&self) -> usize {
        self.per_edge.len()
    }

    /// `r · λ ≥ C(k, k') · C(n − k − 1, k' − 1) · |H*|`, compared exactly.
    /// Holds whenever the host has no `r`-regular subgraph.
    pub fn meets_lower_bound(&self, n: usize) -> bool {
        let rhs = binomial(self.k, self.k_prime) * binomial_or_zero(n, self.k + 1, self.k_prime - 1) * self.h_star() as u128;
        self.r as u128 * self.lambda >= rhs
    }
}

/// `C(n − sub, j)`, zero when `sub > n`.
fn binomial_or_zero(n: usize, sub: usize, j: usize) -> u128 {
    n.checked_sub(sub).map_or(0, |m| binomial(m, j))
}

fn check_uniform(h: &Hypergraph) -> Result<usize, ExtremalError> {
    let k = h.edges().first().map_or(0, |e| e.len());
    if h.edges().iter().any(|e| e.len() != k) {
        return Err(ExtremalError::NotUniform(k));
    }
    Ok(k)
}

fn check_vertex(h: &Hypergraph, v: Vertex) -> Result<(), ExtremalError> {
    if v >= h.n() {
        return Err(ExtremalError::InvalidArgument(format!("vertex {v} out of range for {} vertices", h.n())));
    }
    Ok(())
}

/// Counts wedges at `v` without listing the non-edges through `v`: for each
/// edge `e` avoiding `v`, every candidate `f` is `(e ∖ D) ∪ S ∪ {v}` for a
/// `k'`-set `D ⊆ e` and a `(k'−1)`-set `S` outside `e ∪ {v}`, and counts when
/// `f` is not an edge.
pub fn count_wedges(h: &Hypergraph, v: Vertex, r: usize) -> Result<WedgeCount, ExtremalError> {
    check_vertex(h, v)?;
    let k = check_uniform(h)?;
    if r == 0 || k == 0 || k % r != 0 {
        return Err(ExtremalError::InvalidArgument(format!("r must divide k, got k={k}, r={r}")));
    }
    let kp = k / r;
    let mut per_edge = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        if e.contains(v) {
            continue;
        }
        let outside: Vec<Vertex> = (0..h.n()).filter(|&u| u != v && !e.contains(u)).collect();
        let mut count = 0u128;
        for d in e.iter().combinations(kp) {
            let kept = e.difference(&Edge::from_vertices(d)).with(v);
            for s in outside.iter().copied().combinations(kp - 1) {
                let f = s.into_iter().fold(kept.clone(), |acc, u| acc.with(u));
                if !h.contains_edge(&f) {
                    count += 1;
                }
            }
        }
        per_edge.push((i, count));
    }
    Ok(WedgeCount {
        v,
        r,
        k,
        k_prime: kp,
        lambda: per_edge.iter().map(|&(_, c)| c).sum(),
        per_edge,
    })
}

/// Good and bad 3-sets `T ⊆ V ∖ {v}`.
///
/// `T` is bad when at least `C(n−k−4, k−4) / 8` of the `k`-sets through
/// `T ∪ {v}` are non-edges, tested as `8 · d ≥ C(n−k−4, k−4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeSetClasses {
    pub threshold: u128,
    pub good: Vec<[Vertex; 3]>,
    pub bad: Vec<[Vertex; 3]>,
    /// Non-edges through `v`.
    pub h_tilde: u128,
}

pub fn classify_3sets(h: &Hypergraph, v: Vertex) -> Result<ThreeSetClasses, ExtremalError> {
    check_vertex(h, v)?;
    let k = check_uniform(h)?;
    if k < 5 {
        return Err(ExtremalError::InvalidArgument(format!("3-set classes need k >= 5, got {k}")));
    }
    let n = h.n();
    let mut through: HashMap<[Vertex; 3], u128> = HashMap::new();
    let mut star_edges = 0u128;
    for e in h.edges().iter().filter(|e| e.contains(v)) {
        star_edges += 1;
        for t in e.without(v).iter().combinations(3) {
            *through.entry([t[0], t[1], t[2]]).or_default() += 1;
        }
    }
    let threshold = binomial_or_zero(n, k + 4, k - 4);
    let slots = binomial_or_zero(n, 4, k - 4);
    let mut good = Vec::new();
    let mut bad = Vec::new();
    for t in (0..n).filter(|&u| u != v).combinations(3) {
        let t = [t[0], t[1], t[2]];
        let missing = slots - through.get(&t).copied().unwrap_or(0);
        if 8 * missing >= threshold {
            bad.push(t);
        } else {
            good.push(t);
        }
    }
    Ok(ThreeSetClasses {
        threshold,
        good,
        bad,
        h_tilde: binomial_or_zero(n, 1, k - 1) - star_edges,
    })
}
