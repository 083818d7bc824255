//! Hypergraph data model and the elementary operations everything else builds on.
//!
//! A [`Hypergraph`] has dense vertex ids `0..n` and a list of distinct edges kept
//! in colexicographic order. All iteration and tie-breaking in the crate follows
//! that order, which is what makes every search and generator deterministic.

mod edge;
mod io;

pub use edge::{Edge, EdgeIter, Vertex};
pub use io::ParseError;

use std::collections::HashMap;
use std::ops::Index;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("vertex {vertex} out of range for {n} vertices (edge {edge})")]
    VertexOutOfRange { edge: usize, vertex: Vertex, n: usize },
    #[error("vertex {vertex} repeated within edge {edge}")]
    RepeatedVertex { edge: usize, vertex: Vertex },
    #[error("edges {first} and {second} are the same set")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge index {index} out of range ({len} edges)")]
    EdgeIndexOutOfRange { index: usize, len: usize },
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("{0}")]
    InvalidArgument(String),
}

/// A finite hypergraph on vertices `0..n` with distinct edges in colex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Hypergraph {
    /// Builds a hypergraph from raw vertex lists. Lists need not be sorted, but
    /// may not repeat a vertex; duplicate edges are rejected, never merged.
    pub fn new<E, I>(n: usize, edges: E) -> Result<Hypergraph, HypergraphError>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let raw: Vec<Vec<Vertex>> = edges.into_iter().map(|e| e.into_iter().collect()).collect();
        let mut checked = Vec::with_capacity(raw.len());
        for (i, mut verts) in raw.into_iter().enumerate() {
            verts.sort_unstable();
            if let Some(w) = verts.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex { edge: i, vertex: w[0] });
            }
            if let Some(&v) = verts.last().filter(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { edge: i, vertex: v, n });
            }
            checked.push(Edge::from_sorted(&verts));
        }
        Self::from_checked(n, checked).map_err(|(a, b)| HypergraphError::DuplicateEdge { first: a, second: b })
    }

    /// Builds a hypergraph from edges already known to lie in range. On a duplicate,
    /// returns the input positions of the two copies.
    pub(crate) fn from_checked(n: usize, edges: Vec<Edge>) -> Result<Hypergraph, (usize, usize)> {
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_by(|&a, &b| edges[a].cmp(&edges[b]).then(a.cmp(&b)));
        for w in order.windows(2) {
            if edges[w[0]] == edges[w[1]] {
                return Err((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        let mut slots: Vec<Option<Edge>> = edges.into_iter().map(Some).collect();
        let sorted = order.iter().map(|&i| slots[i].take().unwrap()).collect();
        Ok(Hypergraph { n, edges: sorted })
    }

    /// Builds from a set of edges, silently dropping repeats. Used by generators
    /// whose construction can reach the same set twice.
    pub(crate) fn from_edge_set(n: usize, mut edges: Vec<Edge>) -> Hypergraph {
        edges.sort();
        edges.dedup();
        debug_assert!(edges.iter().all(|e| e.max_vertex().is_none_or(|v| v < n)));
        Hypergraph { n, edges }
    }

    pub fn empty(n: usize) -> Hypergraph {
        Hypergraph { n, edges: Vec::new() }
    }

    /// All `k`-subsets of `0..n`.
    pub fn complete(n: usize, k: usize) -> Hypergraph {
        let edges = itertools::Itertools::combinations(0..n, k)
            .map(|c| Edge::from_sorted(&c))
            .collect();
        Hypergraph::from_edge_set(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    /// Common edge size, or `None` for an edgeless or mixed-size hypergraph.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// Index of `edge` in colex storage order.
    pub fn index_of(&self, edge: &Edge) -> Option<usize> {
        self.edges.binary_search(edge).ok()
    }

    pub fn contains_edge(&self, edge: &Edge) -> bool {
        self.index_of(edge).is_some()
    }

    /// Hypergraph on the same vertex range keeping only the chosen edges.
    pub fn edge_subgraph(&self, indices: &[usize]) -> Result<Hypergraph, HypergraphError> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        self.check_indices(&idx)?;
        Ok(Hypergraph {
            n: self.n,
            edges: idx.iter().map(|&i| self.edges[i].clone()).collect(),
        })
    }

    /// Adds edges, returning a new hypergraph. Duplicates are an error.
    pub fn with_edges<I: IntoIterator<Item = Edge>>(&self, extra: I) -> Result<Hypergraph, HypergraphError> {
        let mut all = self.edges.clone();
        for e in extra {
            if let Some(v) = e.max_vertex().filter(|&v| v >= self.n) {
                return Err(HypergraphError::VertexOutOfRange { edge: all.len(), vertex: v, n: self.n });
            }
            all.push(e);
        }
        Self::from_checked(self.n, all).map_err(|(a, b)| HypergraphError::DuplicateEdge { first: a, second: b })
    }

    fn check_indices(&self, indices: &[usize]) -> Result<(), HypergraphError> {
        match indices.iter().find(|&&i| i >= self.edges.len()) {
            Some(&index) => Err(HypergraphError::EdgeIndexOutOfRange { index, len: self.edges.len() }),
            None => Ok(()),
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), HypergraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(HypergraphError::InvalidArgument(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )))
        }
    }

    /// Degrees counted over the chosen edges only.
    pub fn degree_vector(&self, subset: &[usize]) -> Result<DegreeVector, HypergraphError> {
        self.check_indices(subset)?;
        let mut deg = vec![0usize; self.n];
        for &i in subset {
            for v in self.edges[i].iter() {
                deg[v] += 1;
            }
        }
        Ok(DegreeVector(deg))
    }

    /// Degrees over all edges.
    pub fn degrees(&self) -> DegreeVector {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for v in e.iter() {
                deg[v] += 1;
            }
        }
        DegreeVector(deg)
    }

    /// The link of `d`: every edge containing `d`, with `d` removed.
    pub fn link(&self, d: &[Vertex]) -> Result<LinkGraph, HypergraphError> {
        for &v in d {
            self.check_vertex(v)?;
        }
        let core = Edge::from_vertices(d.iter().copied());
        let edges = self
            .edges
            .iter()
            .filter(|e| core.is_subset(e))
            .map(|e| e.difference(&core))
            .collect();
        Ok(LinkGraph {
            graph: Hypergraph::from_edge_set(self.n, edges),
            removed: core.to_vec(),
        })
    }

    /// `E(H_x) ∩ E(H_y)`: the `(k−1)`-sets `f` with both `f ∪ {x}` and `f ∪ {y}` edges.
    pub fn link_intersection(&self, x: Vertex, y: Vertex) -> Result<Hypergraph, HypergraphError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(HypergraphError::InvalidArgument("link intersection needs x != y".into()));
        }
        if self.uniformity().is_none() && !self.edges.is_empty() {
            return Err(HypergraphError::NotUniform);
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.contains(x) && !e.contains(y))
            .map(|e| e.without(x))
            .filter(|f| self.contains_edge(&f.with(y)))
            .collect();
        Ok(Hypergraph::from_edge_set(self.n, edges))
    }

    /// First-fit matching in colex edge order, stopping once `target` edges are
    /// chosen. Pass `usize::MAX` for a maximal matching.
    pub fn greedy_matching(&self, target: usize) -> Vec<usize> {
        let mut chosen = Vec::new();
        let mut used = Edge::empty();
        for (i, e) in self.edges.iter().enumerate() {
            if chosen.len() >= target {
                break;
            }
            if e.is_disjoint(&used) {
                used = used.union(e);
                chosen.push(i);
            }
        }
        chosen
    }

    /// Map from edge to storage index, for callers doing many lookups.
    pub fn edge_index_map(&self) -> HashMap<Edge, usize> {
        self.edges.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect()
    }
}

impl Index<usize> for Hypergraph {
    type Output = Edge;

    fn index(&self, i: usize) -> &Edge {
        &self.edges[i]
    }
}

/// Per-vertex degree counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl std::ops::Deref for DegreeVector {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// The link of a vertex set `D`, together with `D` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkGraph {
    pub graph: Hypergraph,
    pub removed: Vec<Vertex>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn new_sorts_colex_and_rejects_duplicates() {
        let h = hg(4, &[&[1, 2, 3], &[2, 1, 0]]);
        assert_eq!(h.edge(0).to_vec(), vec![0, 1, 2]);
        assert_eq!(h.edge(1).to_vec(), vec![1, 2, 3]);
        let dup = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3], vec![1, 0]]);
        assert_eq!(dup, Err(HypergraphError::DuplicateEdge { first: 0, second: 2 }));
        assert!(matches!(
            Hypergraph::new(3, vec![vec![0, 3]]),
            Err(HypergraphError::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, vec![vec![1, 1]]),
            Err(HypergraphError::RepeatedVertex { vertex: 1, .. })
        ));
    }

    #[test]
    fn degree_vector_of_star() {
        // Hand count: center 0 lies on all three edges, each leaf on two.
        let star = hg(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3]]);
        assert_eq!(star.degree_vector(&[0, 1, 2]).unwrap().as_slice(), &[3, 2, 2, 2]);
        assert_eq!(star.degree_vector(&[]).unwrap().as_slice(), &[0, 0, 0, 0]);
        assert!(matches!(
            star.degree_vector(&[3]),
            Err(HypergraphError::EdgeIndexOutOfRange { index: 3, len: 3 })
        ));
    }

    #[test]
    fn link_and_intersection() {
        let h = hg(4, &[&[0, 1, 2], &[0, 1, 3]]);
        let l = h.link_intersection(2, 3).unwrap();
        assert_eq!(l.edges(), &[Edge::from_vertices([0, 1])]);
        assert!(h.link(&[2, 3]).unwrap().graph.is_empty());
        assert!(h.link_intersection(1, 1).is_err());

        let k5 = Hypergraph::complete(5, 3);
        let inter = k5.link_intersection(0, 1).unwrap();
        let expected: Vec<Edge> = [[2, 3], [2, 4], [3, 4]].iter().map(|p| Edge::from_vertices(*p)).collect();
        assert_eq!(inter.edges(), &expected[..]);

        let mixed = hg(4, &[&[0, 1], &[0, 1, 2]]);
        assert_eq!(mixed.link_intersection(0, 1), Err(HypergraphError::NotUniform));
    }

    #[test]
    fn greedy_matching_colex_trace() {
        let k9 = Hypergraph::complete(9, 3);
        let m = k9.greedy_matching(3);
        let got: Vec<Vec<usize>> = m.iter().map(|&i| k9.edge(i).to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
        let single = hg(3, &[&[0, 1, 2]]);
        assert_eq!(single.greedy_matching(usize::MAX), vec![0]);
        assert_eq!(k9.greedy_matching(0), Vec::<usize>::new());
    }

    #[test]
    fn index_lookup_and_uniformity() {
        let k = Hypergraph::complete(6, 3);
        assert_eq!(k.num_edges(), 20);
        assert_eq!(k.uniformity(), Some(3));
        for (i, e) in k.edges().iter().enumerate() {
            assert_eq!(k.index_of(e), Some(i));
        }
        assert_eq!(Hypergraph::empty(3).uniformity(), None);
    }
}
