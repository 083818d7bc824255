use std::collections::HashMap;

use itertools::Itertools;

use super::{find_same_union, PatternError};
use crate::gadgets::{gadget_h, gadget_hprime_split};
use crate::hypercore::{Edge, Hypergraph, Vertex};
use crate::util::binomial;

/// A copy of `H(k,l)` (or `H'(k,l)`) inside a host.
///
/// `mapping[i]` is the host vertex playing template vertex `i`, where the
/// template is [`gadget_h`] or [`gadget_hprime_split`] with the recorded split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedCopy {
    pub k: usize,
    pub l: usize,
    pub prime: bool,
    /// `|A ∩ C|` for `H'` copies.
    pub split: Option<usize>,
    pub mapping: Vec<Vertex>,
    /// Host edge indices of the image, ascending.
    pub host_edges: Vec<usize>,
}

impl EmbeddedCopy {
    pub fn template(&self) -> Option<Hypergraph> {
        let built = match self.split {
            Some(s) if self.prime => gadget_hprime_split(self.k, self.l, s),
            None if !self.prime => gadget_h(self.k, self.l),
            _ => return None,
        };
        built.ok().map(|(h, _)| h)
    }
}

/// Rechecks that the mapping is injective and carries every template edge to
/// the listed host edges.
pub fn verify_copy(h: &Hypergraph, copy: &EmbeddedCopy) -> bool {
    let Some(template) = copy.template() else { return false };
    if copy.mapping.len() != template.n() || copy.mapping.iter().any(|&v| v >= h.n()) {
        return false;
    }
    if copy.mapping.iter().sorted().dedup().count() != copy.mapping.len() {
        return false;
    }
    let mut image = Vec::with_capacity(template.num_edges());
    for e in template.edges() {
        match h.index_of(&Edge::from_vertices(e.iter().map(|v| copy.mapping[v]))) {
            Some(i) => image.push(i),
            None => return false,
        }
    }
    image.sort_unstable();
    image == copy.host_edges
}

/// Stationary parts (in template order), split and dynamic pairs, outermost first.
struct Found {
    a: Vec<Vertex>,
    b: Vec<Vertex>,
    split: Option<usize>,
    pairs: Vec<(Vertex, Vertex)>,
}

/// Number of `(k−1)`-sets `f` with `f ∪ {x}` and `f ∪ {y}` both edges, for
/// every pair `x < y` where it is at least `need`; sorted by decreasing count,
/// then by pair.
fn ranked_pairs(h: &Hypergraph, need: usize) -> Vec<(usize, Vertex, Vertex)> {
    let mut through: HashMap<Edge, Vec<Vertex>> = HashMap::new();
    for e in h.edges() {
        for x in e.iter() {
            through.entry(e.without(x)).or_default().push(x);
        }
    }
    let n = h.n();
    let mut count = vec![0usize; n * n];
    for xs in through.values() {
        for (i, &x) in xs.iter().enumerate() {
            for &y in &xs[i + 1..] {
                let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                count[lo * n + hi] += 1;
            }
        }
    }
    let mut ranked: Vec<(usize, Vertex, Vertex)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter_map(|(x, y)| {
            let c = count[x * n + y];
            (c >= need && c > 0).then_some((c, x, y))
        })
        .collect();
    ranked.sort_by(|p, q| q.0.cmp(&p.0).then((p.1, p.2).cmp(&(q.1, q.2))));
    ranked
}

fn search(h: &Hypergraph, l: usize, prime: bool) -> Option<Found> {
    if l == 0 {
        if prime {
            let q = find_same_union(h)?;
            let [a, b, c, d] = [q.a, q.b, q.c, q.d].map(|i| &h[i]);
            let ac = a.intersection(c);
            let split = ac.len();
            let a_order = ac.iter().chain(a.intersection(d).iter()).collect();
            let b_order = b.intersection(d).iter().chain(b.intersection(c).iter()).collect();
            return Some(Found {
                a: a_order,
                b: b_order,
                split: Some(split),
                pairs: Vec::new(),
            });
        }
        let m = h.num_edges();
        return (0..m).flat_map(|j| (0..j).map(move |i| (i, j))).find_map(|(i, j)| {
            h[i].is_disjoint(&h[j]).then(|| Found {
                a: h[i].to_vec(),
                b: h[j].to_vec(),
                split: None,
                pairs: Vec::new(),
            })
        });
    }
    let need = 1usize << if prime { l + 1 } else { l };
    for (_, x, y) in ranked_pairs(h, need) {
        let inner = h.link_intersection(x, y).expect("uniform host, distinct vertices");
        if let Some(mut found) = search(&inner, l - 1, prime) {
            found.pairs.insert(0, (x, y));
            return Some(found);
        }
    }
    None
}

/// Looks for a copy of `H(k,l)`, or of `H'(k,l)` when `prime` is set.
///
/// For `l ≥ 1` this follows the induction on `l`: for vertex pairs `(x, x')`
/// taken by decreasing size of `E(H_x) ∩ E(H_x')`, search that link
/// intersection for the `(k−1, l−1)` gadget and add `x, x'` as a new dynamic
/// pair. At `l = 0` the gadget is two disjoint edges, or two such pairs with
/// the same union when `prime`. Every pair is tried, so `None` means the host
/// has no copy.
pub fn find_gadget_copy(h: &Hypergraph, k: usize, l: usize, prime: bool) -> Result<Option<EmbeddedCopy>, PatternError> {
    if l >= k || (prime && k - l < 2) {
        let need = if prime { "k - l >= 2" } else { "k > l" };
        return Err(PatternError::InvalidArgument(format!("gadget needs {need}, got k={k}, l={l}")));
    }
    if h.edges().iter().any(|e| e.len() != k) {
        return Err(PatternError::NotUniform(k));
    }
    let Some(found) = search(h, l, prime) else { return Ok(None) };
    let mut mapping = found.a;
    mapping.extend(found.b);
    mapping.extend(found.pairs.iter().flat_map(|&(x, y)| [x, y]));
    let mut copy = EmbeddedCopy {
        k,
        l,
        prime,
        split: found.split,
        mapping,
        host_edges: Vec::new(),
    };
    let template = copy.template().expect("parameters checked above");
    copy.host_edges = template
        .edges()
        .iter()
        .map(|e| {
            h.index_of(&Edge::from_vertices(e.iter().map(|v| copy.mapping[v])))
                .expect("lifted edges lie in the host")
        })
        .sorted()
        .collect();
    Ok(Some(copy))
}

/// Whether a hypergraph with `2n^{k − 2^{−l}}` edges can exist on `n` vertices
/// at all, and `n > 2k`; otherwise the density statement about gadget copies
/// says nothing. The `H'` part additionally needs `k ≥ l + 3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PremiseCheck {
    pub threshold: f64,
    pub available: u128,
    pub attainable: bool,
}

pub fn gadget_copy_premise(n: usize, k: usize, l: usize, prime: bool) -> PremiseCheck {
    let threshold = 2.0 * (n as f64).powf(k as f64 - 0.5f64.powi(l as i32));
    let available = binomial(n, k);
    let attainable = n > 2 * k && threshold <= available as f64 && (!prime || k >= l + 3);
    PremiseCheck {
        threshold,
        available,
        attainable,
    }
}
