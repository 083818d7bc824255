//! Extremal values at desk scale: exhaustive search for the largest
//! `r`-regular-free hypergraph, wedge counts around a star center, good and bad
//! 3-sets, linearity, and minimum equipartition-hitting families.

mod hitting;
mod search;
mod wedges;

pub use hitting::{min_hitting_family, HittingReport};
pub use search::{extremal_search, SearchOptions, SearchReport, SEARCH_MAX_EDGES};
pub use wedges::{classify_3sets, count_wedges, ThreeSetClasses, WedgeCount};

use thiserror::Error;

use crate::hypercore::Hypergraph;
use crate::patterns::PatternError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("C({n},{k}) = {edges} candidate edges exceeds the limit of {max}")]
    GuardExceeded { n: usize, k: usize, edges: u128, max: usize },
    #[error("regularity must be at least 2, got {0}")]
    RegularityTooSmall(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypergraph is not {0}-uniform")]
    NotUniform(usize),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// True iff every two distinct edges share at most one vertex.
pub fn is_linear(h: &Hypergraph) -> bool {
    let e = h.edges();
    (0..e.len()).all(|j| (0..j).all(|i| e[i].intersection_len(&e[j]) <= 1))
}
