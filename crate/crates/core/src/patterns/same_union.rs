use std::collections::HashMap;

use crate::hypercore::{Edge, Hypergraph};

/// Edges `A, B, C, D` with `A ∩ B = C ∩ D = ∅`, `A ∪ B = C ∪ D` and `{A,B} ≠ {C,D}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SameUnionQuad {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl SameUnionQuad {
    pub fn verify(&self, h: &Hypergraph) -> bool {
        let idx = [self.a, self.b, self.c, self.d];
        if idx.iter().any(|&i| i >= h.num_edges()) {
            return false;
        }
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| idx[i] != idx[j]));
        let [a, b, c, d] = idx.map(|i| &h[i]);
        distinct && a.is_disjoint(b) && c.is_disjoint(d) && a.union(b) == c.union(d)
    }
}

/// Hashes every disjoint pair by its union and returns the first collision.
///
/// Pairs `(i, j)` with `i < j` are scanned by `j`, then `i`; the quad reports
/// the earlier pair as `(a, b)` and the colliding one as `(c, d)`. Two disjoint
/// pairs with the same union share no edge, so the four edges are distinct.
pub fn find_same_union(h: &Hypergraph) -> Option<SameUnionQuad> {
    let mut seen: HashMap<Edge, (usize, usize)> = HashMap::new();
    for j in 0..h.num_edges() {
        for i in 0..j {
            if !h[i].is_disjoint(&h[j]) {
                continue;
            }
            let union = h[i].union(&h[j]);
            if let Some(&(a, b)) = seen.get(&union) {
                return Some(SameUnionQuad { a, b, c: i, d: j });
            }
            seen.insert(union, (i, j));
        }
    }
    None
}
