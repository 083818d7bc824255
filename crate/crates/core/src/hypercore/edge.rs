use std::cmp::Ordering;
use std::fmt;

/// A vertex id. Vertices of an `n`-vertex hypergraph are `0..n`.
pub type Vertex = usize;

const MASK_WIDTH: usize = 128;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Bit `v` set iff `v` belongs to the edge. Used whenever every vertex is below 128.
    Mask(u128),
    /// Strictly ascending vertex list, used when some vertex is 128 or larger.
    Sparse(Box<[Vertex]>),
}

/// A set of vertices.
///
/// Small vertex ids are packed into a single `u128`; larger ones fall back to a
/// sorted list. The representation is a function of the contents, so equal sets
/// always compare equal. Ordering is colexicographic: the set holding the largest
/// element of the symmetric difference is the larger one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    repr: Repr,
}

impl Edge {
    /// Builds an edge from vertices that are already strictly ascending.
    pub(crate) fn from_sorted(vertices: &[Vertex]) -> Edge {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        match vertices.last() {
            Some(&max) if max >= MASK_WIDTH => Edge {
                repr: Repr::Sparse(vertices.into()),
            },
            _ => {
                let mask = vertices.iter().fold(0u128, |m, &v| m | (1u128 << v));
                Edge {
                    repr: Repr::Mask(mask),
                }
            }
        }
    }

    /// Builds an edge from any vertex collection; repeated vertices collapse.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Edge {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Edge::from_sorted(&v)
    }

    pub fn empty() -> Edge {
        Edge {
            repr: Repr::Mask(0),
        }
    }

    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Mask(m) => m.count_ones() as usize,
            Repr::Sparse(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match &self.repr {
            Repr::Mask(m) => v < MASK_WIDTH && (m >> v) & 1 == 1,
            Repr::Sparse(s) => s.binary_search(&v).is_ok(),
        }
    }

    /// Vertices in ascending order.
    pub fn iter(&self) -> EdgeIter<'_> {
        match &self.repr {
            Repr::Mask(m) => EdgeIter::Mask(*m),
            Repr::Sparse(s) => EdgeIter::Sparse(s.iter()),
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        match &self.repr {
            Repr::Mask(0) => None,
            Repr::Mask(m) => Some(127 - m.leading_zeros() as usize),
            Repr::Sparse(s) => s.last().copied(),
        }
    }

    /// The packed mask, when every vertex is below 128.
    pub fn as_mask(&self) -> Option<u128> {
        match &self.repr {
            Repr::Mask(m) => Some(*m),
            Repr::Sparse(_) => None,
        }
    }

    pub fn intersection_len(&self, other: &Edge) -> usize {
        match (&self.repr, &other.repr) {
            (Repr::Mask(a), Repr::Mask(b)) => (a & b).count_ones() as usize,
            _ => self.iter().filter(|&v| other.contains(v)).count(),
        }
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        self.intersection_len(other) == 0
    }

    pub fn is_subset(&self, other: &Edge) -> bool {
        match (&self.repr, &other.repr) {
            (Repr::Mask(a), Repr::Mask(b)) => a & !b == 0,
            _ => self.iter().all(|v| other.contains(v)),
        }
    }

    pub fn union(&self, other: &Edge) -> Edge {
        match (&self.repr, &other.repr) {
            (Repr::Mask(a), Repr::Mask(b)) => Edge {
                repr: Repr::Mask(a | b),
            },
            _ => Edge::from_vertices(self.iter().chain(other.iter())),
        }
    }

    pub fn intersection(&self, other: &Edge) -> Edge {
        match (&self.repr, &other.repr) {
            (Repr::Mask(a), Repr::Mask(b)) => Edge {
                repr: Repr::Mask(a & b),
            },
            _ => Edge::from_vertices(self.iter().filter(|&v| other.contains(v))),
        }
    }

    pub fn difference(&self, other: &Edge) -> Edge {
        match (&self.repr, &other.repr) {
            (Repr::Mask(a), Repr::Mask(b)) => Edge {
                repr: Repr::Mask(a & !b),
            },
            _ => Edge::from_vertices(self.iter().filter(|&v| !other.contains(v))),
        }
    }

    pub fn with(&self, v: Vertex) -> Edge {
        Edge::from_vertices(self.iter().chain(std::iter::once(v)))
    }

    pub fn without(&self, v: Vertex) -> Edge {
        Edge::from_vertices(self.iter().filter(|&u| u != v))
    }
}

impl Ord for Edge {
    fn cmp(&self, other: &Edge) -> Ordering {
        if let (Repr::Mask(a), Repr::Mask(b)) = (&self.repr, &other.repr) {
            return a.cmp(b);
        }
        let a = self.to_vec();
        let b = other.to_vec();
        // Walk down from the top; the first difference decides.
        let mut i = a.len();
        let mut j = b.len();
        loop {
            match (i, j) {
                (0, 0) => return Ordering::Equal,
                (0, _) => return Ordering::Less,
                (_, 0) => return Ordering::Greater,
                _ => {}
            }
            match a[i - 1].cmp(&b[j - 1]) {
                Ordering::Equal => {
                    i -= 1;
                    j -= 1;
                }
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Edge) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromIterator<Vertex> for Edge {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Edge {
        Edge::from_vertices(iter)
    }
}

pub enum EdgeIter<'a> {
    Mask(u128),
    Sparse(std::slice::Iter<'a, Vertex>),
}

impl Iterator for EdgeIter<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        match self {
            EdgeIter::Mask(m) => {
                if *m == 0 {
                    None
                } else {
                    let v = m.trailing_zeros() as usize;
                    *m &= *m - 1;
                    Some(v)
                }
            }
            EdgeIter::Sparse(it) => it.next().copied(),
        }
    }
}
