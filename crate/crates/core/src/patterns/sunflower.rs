use itertools::Itertools;

use super::PatternError;
use crate::hypercore::{Edge, Hypergraph, Vertex};
use crate::util::binomial;

/// Largest `C(|E|, p)` the exhaustive fallback of [`find_sunflower`] accepts.
pub const SUNFLOWER_EXHAUSTIVE_LIMIT: u128 = 10_000_000;

/// `p` edges whose pairwise intersections all equal `core`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sunflower {
    /// Edge indices, ascending.
    pub petals: Vec<usize>,
    pub core: Edge,
}

impl Sunflower {
    /// Rechecks the petals against `h` from scratch.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        if self.petals.len() < 2 || self.petals.iter().any(|&i| i >= h.num_edges()) {
            return false;
        }
        if !self.petals.iter().tuple_windows().all(|(a, b)| a < b) {
            return false;
        }
        self.petals
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| h[a].intersection(&h[b]) == self.core)
    }
}

/// Outcome of [`find_sunflower`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SunflowerSearch {
    /// The greedy recursion produced a sunflower.
    Greedy(Sunflower),
    /// Greedy failed; exhaustive search found one.
    Exhaustive(Sunflower),
    /// Exhaustive search proved there is none.
    Absent,
    /// Greedy failed and the family is too large for exhaustive search.
    Undetermined,
}

impl SunflowerSearch {
    pub fn sunflower(&self) -> Option<&Sunflower> {
        match self {
            SunflowerSearch::Greedy(s) | SunflowerSearch::Exhaustive(s) => Some(s),
            _ => None,
        }
    }
}

/// Erdős–Rado recursion on `(set, original index)` pairs. Returns petal indices
/// and the core.
fn greedy(family: &[(Edge, usize)], p: usize) -> Option<(Vec<usize>, Edge)> {
    let mut used = Edge::empty();
    let mut matching = Vec::new();
    for (e, i) in family {
        if e.is_disjoint(&used) {
            used = used.union(e);
            matching.push(*i);
            if matching.len() == p {
                return Some((matching, Edge::empty()));
            }
        }
    }
    let mut count: Vec<usize> = Vec::new();
    for (e, _) in family {
        for v in e.iter() {
            if count.len() <= v {
                count.resize(v + 1, 0);
            }
            count[v] += 1;
        }
    }
    // max_by_key keeps the last maximum, so scan in reverse for the lowest id.
    let (v, &c) = count.iter().enumerate().rev().max_by_key(|&(_, c)| c)?;
    if c < p {
        return None;
    }
    let link: Vec<(Edge, usize)> = family
        .iter()
        .filter(|(e, _)| e.contains(v))
        .map(|(e, i)| (e.without(v), *i))
        .collect();
    let (petals, core) = greedy(&link, p)?;
    Some((petals, core.with(v as Vertex)))
}

/// Depth-first search for `p` petals in ascending index order.
fn exhaustive(h: &Hypergraph, p: usize) -> Option<Sunflower> {
    fn extend(h: &Hypergraph, p: usize, chosen: &mut Vec<usize>, core: &Option<Edge>) -> Option<Sunflower> {
        if chosen.len() == p {
            let mut petals = chosen.clone();
            petals.sort_unstable();
            return Some(Sunflower {
                petals,
                core: core.clone().unwrap_or_else(Edge::empty),
            });
        }
        let start = chosen.last().map_or(0, |&i| i + 1);
        for j in start..h.num_edges() {
            let core_here = match core {
                Some(c) => {
                    if !chosen.iter().all(|&i| h[i].intersection(&h[j]) == *c) {
                        continue;
                    }
                    Some(c.clone())
                }
                None => chosen.first().map(|&i| h[i].intersection(&h[j])),
            };
            chosen.push(j);
            let found = extend(h, p, chosen, &core_here);
            chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    extend(h, p, &mut Vec::new(), &None)
}

/// Looks for a `p`-sunflower. Runs the greedy Erdős–Rado recursion first and
/// falls back to exhaustive search when `C(|E|, p)` is at most
/// [`SUNFLOWER_EXHAUSTIVE_LIMIT`].
pub fn find_sunflower(h: &Hypergraph, p: usize) -> Result<SunflowerSearch, PatternError> {
    if p < 2 {
        return Err(PatternError::InvalidArgument(format!("sunflowers need p >= 2, got {p}")));
    }
    let family: Vec<(Edge, usize)> = h.edges().iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    if let Some((mut petals, core)) = greedy(&family, p) {
        petals.sort_unstable();
        return Ok(SunflowerSearch::Greedy(Sunflower { petals, core }));
    }
    if binomial(h.num_edges(), p) > SUNFLOWER_EXHAUSTIVE_LIMIT {
        return Ok(SunflowerSearch::Undetermined);
    }
    Ok(match exhaustive(h, p) {
        Some(s) => SunflowerSearch::Exhaustive(s),
        None => SunflowerSearch::Absent,
    })
}

/// The `(p−1)^k` transversals of `k` disjoint groups of `p − 1` vertices; group
/// `i` is `i(p−1)..(i+1)(p−1)`. Contains no `p`-sunflower.
pub fn sunflower_free_family(k: usize, p: usize) -> Result<Hypergraph, PatternError> {
    if k == 0 || p < 2 {
        return Err(PatternError::InvalidArgument(format!("need k >= 1 and p >= 2, got k={k}, p={p}")));
    }
    let g = p - 1;
    let edges = (0..k)
        .map(|i| i * g..(i + 1) * g)
        .multi_cartesian_product()
        .map(Edge::from_vertices)
        .collect();
    Ok(Hypergraph::from_edge_set(k * g, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_gives_empty_core() {
        let h = Hypergraph::new(9, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap();
        let s = find_sunflower(&h, 3).unwrap();
        let SunflowerSearch::Greedy(s) = s else { panic!("{s:?}") };
        assert!(s.core.is_empty());
        assert!(s.verify(&h));
    }

    #[test]
    fn common_pair_core() {
        let h = Hypergraph::new(7, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4], vec![0, 1, 5]]).unwrap();
        let s = find_sunflower(&h, 3).unwrap().sunflower().cloned().unwrap();
        assert_eq!(s.core.to_vec(), vec![0, 1]);
        assert_eq!(s.petals, vec![0, 1, 2]);
        assert!(s.verify(&h));
    }

    #[test]
    fn product_family_shape() {
        let h = sunflower_free_family(2, 3).unwrap();
        let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(edges, vec![vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3]]);
        assert_eq!(sunflower_free_family(1, 5).unwrap().num_edges(), 4);
        let h = sunflower_free_family(3, 3).unwrap();
        assert_eq!(h.num_edges(), 8);
        assert_eq!(find_sunflower(&h, 3).unwrap(), SunflowerSearch::Absent);
    }

    #[test]
    fn exhaustive_finds_what_greedy_misses() {
        // First fit takes {1,2},{0,3}; the link of vertex 1 is too small.
        let h = Hypergraph::new(6, vec![vec![1, 2], vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        let found = find_sunflower(&h, 3).unwrap();
        let SunflowerSearch::Exhaustive(s) = found else { panic!("{found:?}") };
        assert_eq!(s.petals, vec![1, 2, 3]);
        assert!(s.verify(&h));
    }

    #[test]
    fn verify_rejects_bad_core() {
        let h = Hypergraph::new(5, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let bogus = Sunflower {
            petals: vec![0, 1, 2],
            core: Edge::empty(),
        };
        assert!(!bogus.verify(&h));
        assert!(find_sunflower(&h, 1).is_err());
    }
}
