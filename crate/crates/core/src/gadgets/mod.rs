//! Generators for the extremal constructions.
//!
//! Every generator returns the hypergraph together with a [`GadgetDescriptor`]
//! naming its structural pieces, so tests can check structure rather than just
//! edge counts. Layouts are fixed (star centers at vertex 0, parts in ascending
//! blocks) so that outputs are byte-stable.

mod bes;
mod descriptor;

pub use bes::{bes_free, verify_bes_free, BesFreeWitness, BES_VERIFY_LIMIT};
pub use descriptor::{GadgetDescriptor, GadgetKind, GadgetParams};

use itertools::Itertools;
use thiserror::Error;

use crate::hypercore::{Edge, Hypergraph, Vertex};
use crate::util::{binomial, gcd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, GadgetError> {
    Err(GadgetError::InvalidParameters(msg.into()))
}

/// All `k`-sets of `0..n` that contain `center`.
fn star_edges(n: usize, k: usize, center: Vertex) -> Vec<Edge> {
    (0..n)
        .filter(|&v| v != center)
        .combinations(k - 1)
        .map(|rest| Edge::from_vertices(rest.into_iter().chain([center])))
        .collect()
}

/// The full `k`-star on `n` vertices centered at 0: all `C(n−1, k−1)` `k`-sets through 0.
pub fn full_star(n: usize, k: usize) -> Result<(Hypergraph, GadgetDescriptor), GadgetError> {
    if k == 0 || n <= k {
        return invalid(format!("full star needs n > k >= 1, got n={n}, k={k}"));
    }
    let h = Hypergraph::from_edge_set(n, star_edges(n, k, 0));
    let desc = GadgetDescriptor {
        center: Some(0),
        ..GadgetDescriptor::new(GadgetKind::FullStar, GadgetParams { n, k, ..Default::default() })
    };
    Ok((h, desc))
}

/// Full star plus the colex-least `k`-set avoiding the center, `{1, …, k}`.
///
/// When `r | k` this always has an `r`-regular subgraph; see [`star_plus_witness`].
pub fn star_plus(n: usize, k: usize, r: usize) -> Result<(Hypergraph, GadgetDescriptor), GadgetError> {
    if r < 2 || k == 0 || !k.is_multiple_of(r) {
        return invalid(format!("star-plus needs r >= 2 dividing k, got k={k}, r={r}"));
    }
    if n < k + k / r + 1 {
        return invalid(format!("star-plus needs n >= k + k/r + 1 = {}, got n={n}", k + k / r + 1));
    }
    let extra = Edge::from_vertices(1..=k);
    let mut edges = star_edges(n, k, 0);
    edges.push(extra.clone());
    let desc = GadgetDescriptor {
        center: Some(0),
        added_edge: Some(extra),
        ..GadgetDescriptor::new(
            GadgetKind::StarPlus,
            GadgetParams {
                n,
                k,
                r: Some(r),
                ..Default::default()
            },
        )
    };
    Ok((Hypergraph::from_edge_set(n, edges), desc))
}

/// The explicit `(r+1)`-edge regular subgraph of [`star_plus`]: the extra edge
/// `e = {1..k}` split into `r` consecutive blocks `e'_j` of size `k' = k/r`,
/// `g = {k+1, …, k+k'−1}`, and the star edges `(e ∖ e'_j) ∪ g ∪ {0}`.
///
/// Returned as edge indices into the `star_plus(n, k, r)` hypergraph.
pub fn star_plus_witness(n: usize, k: usize, r: usize) -> Result<Vec<usize>, GadgetError> {
    let (h, _) = star_plus(n, k, r)?;
    let kp = k / r;
    let e: Vec<Vertex> = (1..=k).collect();
    let g: Vec<Vertex> = (k + 1..k + kp).collect();
    let mut sets = vec![Edge::from_vertices(e.iter().copied())];
    for block in e.chunks(kp) {
        let star_edge = e
            .iter()
            .copied()
            .filter(|v| !block.contains(v))
            .chain(g.iter().copied())
            .chain([0]);
        sets.push(Edge::from_vertices(star_edge));
    }
    Ok(sets
        .iter()
        .map(|s| h.index_of(s).expect("witness edge belongs to the star-plus hypergraph"))
        .collect())
}

/// Vertex layout shared by `H(k,l)` and `H'(k,l)`: `A = 0..m`, `B = m..2m` with
/// `m = k − l`, then the dynamic pairs `(2m + 2i, 2m + 2i + 1)`.
fn gadget_layout(k: usize, l: usize) -> (Vec<Vertex>, Vec<Vertex>, Vec<(Vertex, Vertex)>) {
    let m = k - l;
    let a = (0..m).collect();
    let b = (m..2 * m).collect();
    let pairs = (0..l).map(|i| (2 * m + 2 * i, 2 * m + 2 * i + 1)).collect();
    (a, b, pairs)
}

/// Every way of picking one vertex from each dynamic pair.
fn pair_choices(pairs: &[(Vertex, Vertex)]) -> Vec<Vec<Vertex>> {
    pairs
        .iter()
        .map(|&(u, v)| [u, v])
        .multi_cartesian_product()
        .collect()
}

fn gadget_edges(parts: &[Vec<Vertex>], pairs: &[(Vertex, Vertex)]) -> Vec<Edge> {
    let choices = pair_choices(pairs);
    parts
        .iter()
        .flat_map(|z| {
            choices
                .iter()
                .map(move |c| Edge::from_vertices(z.iter().copied().chain(c.iter().copied())))
        })
        .collect()
}

/// `H(k,l)`: two stationary parts of size `k − l` and `l` dynamic pairs; the
/// edges are a stationary part plus one vertex from every pair.
pub fn gadget_h(k: usize, l: usize) -> Result<(Hypergraph, GadgetDescriptor), GadgetError> {
    if l >= k {
        return invalid(format!("H(k,l) needs k > l, got k={k}, l={l}"));
    }
    let (a, b, pairs) = gadget_layout(k, l);
    let parts = vec![a, b];
    let h = Hypergraph::from_edge_set(2 * k, gadget_edges(&parts, &pairs));
    let desc = GadgetDescriptor {
        stationary_parts: parts,
        dynamic_pairs: pairs,
        ..GadgetDescriptor::new(
            GadgetKind::Hkl,
            GadgetParams {
                n: 2 * k,
                k,
                l: Some(l),
                ..Default::default()
            },
        )
    };
    Ok((h, desc))
}

/// `H'(k,l)` with the default split: `C` takes the first `⌊m/2⌋` vertices of `A`
/// and the last `m − ⌊m/2⌋` of `B`, `D` the rest (`m = k − l`).
pub fn gadget_hprime(k: usize, l: usize) -> Result<(Hypergraph, GadgetDescriptor), GadgetError> {
    if l >= k || k - l < 2 {
        return invalid(format!("H'(k,l) needs k - l >= 2, got k={k}, l={l}"));
    }
    gadget_hprime_split(k, l, (k - l) / 2)
}

/// `H'(k,l)` where `C` is the first `split` vertices of `A` plus the last
/// `m − split` of `B`. Different splits give non-isomorphic gadgets; any
/// `1 <= split < m` yields four distinct parts.
pub fn gadget_hprime_split(k: usize, l: usize, split: usize) -> Result<(Hypergraph, GadgetDescriptor), GadgetError> {
    if l >= k {
        return invalid(format!("H'(k,l) needs k > l, got k={k}, l={l}"));
    }
    let m = k - l;
    if split == 0 || split >= m {
        return invalid(format!("H'(k,l) split must lie in 1..{m}, got {split}"));
    }
    let (a, b, pairs) = gadget_layout(k, l);
    let c: Vec<Vertex> = a[..split].iter().chain(&b[split..]).copied().collect();
    let d: Vec<Vertex> = a[split..].iter().chain(&b[..split]).copied().sorted().collect();
    let parts = vec![a, b, c, d];
    let h = Hypergraph::from_edge_set(2 * k, gadget_edges(&parts, &pairs));
    let desc = GadgetDescriptor {
        stationary_parts: parts,
        dynamic_pairs: pairs,
        ..GadgetDescriptor::new(
            GadgetKind::HprimeKl,
            GadgetParams {
                n: 2 * k,
                k,
                l: Some(l),
                ..Default::default()
            },
        )
    };
    Ok((h, desc))
}

/// Which star surgery [`example_a`] performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleAVariant {
    /// Add a non-edge `e`, remove an edge `e'` with `|e ∩ e'| = k − 1`; free of `k`-regular subgraphs.
    REqK,
    /// Add a non-edge `e`; free of `(k+1)`-regular subgraphs.
    REqKPlus1,
}

impl std::str::FromStr for ExampleAVariant {
    type Err = GadgetError;

    fn from_str(s: &str) -> Result<Self, GadgetError> {
        match s {
            "r_eq_k" | "r-eq-k" | "k" => Ok(ExampleAVariant::REqK),
            "r_eq_k_plus_1" | "r-eq-k-plus-1" | "k+1" => Ok(ExampleAVariant::REqKPlus1),
            other => invalid(format!("unknown example-a variant `{other}`")),
        }
    }
}

/// Star surgery: `e = {1..k}` (colex-least non-edge) and `e' = {0..k−1}`
/// (colex-least star edge meeting `e` in `k − 1` vertices).
pub fn example_a(n: usize, k: usize, variant: ExampleAVariant) -> Result<(Hypergraph, GadgetDescriptor), GadgetError> {
    if k < 2 || n < k + 2 {
        return invalid(format!("example A needs k >= 2 and n >= k + 2, got n={n}, k={k}"));
    }
    let added = Edge::from_vertices(1..=k);
    let removed = Edge::from_vertices(0..k);
    let mut edges = star_edges(n, k, 0);
    edges.push(added.clone());
    let (kind, removed) = match variant {
        ExampleAVariant::REqK => {
            edges.retain(|e| *e != removed);
            (GadgetKind::ExampleARk, Some(removed))
        }
        ExampleAVariant::REqKPlus1 => (GadgetKind::ExampleARk1, None),
    };
    let r = match variant {
        ExampleAVariant::REqK => k,
        ExampleAVariant::REqKPlus1 => k + 1,
    };
    let desc = GadgetDescriptor {
        center: Some(0),
        added_edge: Some(added),
        removed_edge: removed,
        ..GadgetDescriptor::new(
            kind,
            GadgetParams {
                n,
                k,
                r: Some(r),
                ..Default::default()
            },
        )
    };
    Ok((Hypergraph::from_edge_set(n, edges), desc))
}

/// All `k`-sets meeting the transversal `{0, …, c−1}` in exactly one vertex.
pub fn example_b(n: usize, k: usize, c: usize) -> Result<(Hypergraph, GadgetDescriptor), GadgetError> {
    if c < 2 || k < 1 || n < c + k - 1 {
        return invalid(format!("example B needs c > 1 and n >= c + k - 1, got n={n}, k={k}, c={c}"));
    }
    let edges = (0..c)
        .flat_map(|x| {
            (c..n)
                .combinations(k - 1)
                .map(move |rest| Edge::from_vertices(rest.into_iter().chain([x])))
        })
        .collect();
    let desc = GadgetDescriptor {
        transversal: (0..c).collect(),
        ..GadgetDescriptor::new(
            GadgetKind::ExampleB,
            GadgetParams {
                n,
                k,
                c: Some(c),
                ..Default::default()
            },
        )
    };
    Ok((Hypergraph::from_edge_set(n, edges), desc))
}

/// The regularity above which [`example_b`] has no regular subgraph: `c·C(c(k−1), k−2)`.
pub fn example_b_threshold(k: usize, c: usize) -> u128 {
    c as u128 * binomial(c * (k - 1), k.saturating_sub(2))
}

/// Splits `k = k'd`, `r = r'd` with `d = gcd(k, r)`; returns `(d, k', r')`.
pub fn construction_64_factors(k: usize, r: usize) -> Result<(usize, usize, usize), GadgetError> {
    if k < 3 || r == 0 {
        return invalid(format!("construction needs k >= 3 and r >= 1, got k={k}, r={r}"));
    }
    let d = gcd(k, r);
    let (kp, rp) = (k / d, r / d);
    if rp < 3 {
        return invalid(format!("construction needs r' = r/gcd(k,r) >= 3, got r'={rp} (k={k}, r={r})"));
    }
    Ok((d, kp, rp))
}

/// Two-star construction: the full star at `x = 0`, plus `e ∪ {y}` (with `y = 1`)
/// for every edge `e` of a `(k−1)`-uniform hypergraph on `2..n` with no `r'` edges
/// spanning `2k − 2` or fewer vertices.
pub fn construction_64(
    n: usize,
    k: usize,
    r: usize,
    seed: u64,
) -> Result<(Hypergraph, GadgetDescriptor), GadgetError> {
    let (d, kp, rp) = construction_64_factors(k, r)?;
    if n < k + 1 {
        return invalid(format!("construction needs n >= k + 1, got n={n}, k={k}"));
    }
    let inner = bes_free(n - 2, k - 1, 2 * k - 2, rp, seed)?;
    let mut edges = star_edges(n, k, 0);
    edges.extend(
        inner
            .graph
            .edges()
            .iter()
            .map(|e| Edge::from_vertices(e.iter().map(|v| v + 2).chain([1]))),
    );
    let desc = GadgetDescriptor {
        center: Some(0),
        second_center: Some(1),
        ..GadgetDescriptor::new(
            GadgetKind::Construction64,
            GadgetParams {
                n,
                k,
                r: Some(r),
                d: Some(d),
                k_prime: Some(kp),
                r_prime: Some(rp),
                seed: Some(seed),
                ..Default::default()
            },
        )
    };
    Ok((Hypergraph::from_edge_set(n, edges), desc))
}

/// Outcome of replaying the no-regular-subgraph argument for [`construction_64`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction64Replay {
    /// Sizes `m = |R ∩ H*|` allowed by `r | k(r + m)` and `m <= r`.
    pub admissible_star_free_counts: Vec<usize>,
    /// Whether every admissible `m` has `m >= r'` and `|V(R)| = k(r+m)/r <= 2k`.
    pub arithmetic_ok: bool,
    /// The inner hypergraph recovered from the host, as `(k−1)`-sets on `2..n`.
    pub inner: Hypergraph,
    /// Exhaustive check that no `r'` inner edges span `<= 2k − 2` vertices.
    pub inner_bes_free: Option<bool>,
    /// Host is exactly the star at `x` plus `y`-edges over the inner hypergraph.
    pub shape_ok: bool,
}

impl Construction64Replay {
    pub fn refutes_all(&self) -> bool {
        self.shape_ok && self.arithmetic_ok && self.inner_bes_free == Some(true)
    }
}

/// Replays the argument that the two-star construction has no `r`-regular
/// subgraph `R`, checking each step against the actual host:
///
/// 1. the host is the full star at `x` plus `{e ∪ {y}}` for a `(k−1)`-uniform
///    inner hypergraph avoiding `x, y` (each part alone lies in a full star, so
///    `R` meets both and covers `x` and `y`);
/// 2. `R` uses exactly `r` star edges, so `|R| = r + m` with `m = |R ∩ H*|`,
///    `1 <= m <= r`, and `r | k(r + m)`; every such `m` must be `>= r'` and give
///    `|V(R)| <= 2k`;
/// 3. then some `r'` inner edges would span `<= 2k − 2` vertices, which the
///    exhaustive scan of the inner hypergraph rules out.
pub fn replay_construction_64(h: &Hypergraph, k: usize, r: usize) -> Result<Construction64Replay, GadgetError> {
    let (_, _, rp) = construction_64_factors(k, r)?;
    let (x, y) = (0, 1);
    let n = h.n();

    let star: Vec<&Edge> = h.edges().iter().filter(|e| e.contains(x)).collect();
    let rest: Vec<&Edge> = h.edges().iter().filter(|e| !e.contains(x)).collect();
    let star_full = star.len() as u128 == binomial(n - 1, k - 1) && star.iter().all(|e| e.len() == k);
    let rest_shape = rest.iter().all(|e| e.len() == k && e.contains(y));
    let inner_edges: Vec<Edge> = rest
        .iter()
        .map(|e| Edge::from_vertices(e.iter().filter(|&v| v != y).map(|v| v - 2)))
        .collect();
    let inner = Hypergraph::from_edge_set(n.saturating_sub(2), inner_edges);

    let admissible: Vec<usize> = (1..=r).filter(|m| (k * (r + m)).is_multiple_of(r)).collect();
    let arithmetic_ok = admissible.iter().all(|&m| m >= rp && k * (r + m) / r <= 2 * k);

    Ok(Construction64Replay {
        admissible_star_free_counts: admissible,
        arithmetic_ok,
        inner_bes_free: verify_bes_free(&inner, 2 * k - 2, rp),
        inner,
        shape_ok: star_full && rest_shape,
    })
}
