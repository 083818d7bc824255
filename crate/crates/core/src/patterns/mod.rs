//! Finders and verifiers for structural patterns: sunflowers, pairs of disjoint
//! edges with the same union, embedded `H(k,l)` gadgets, and families hitting
//! every equipartition.

mod copy;
mod equipartition;
mod same_union;
mod sunflower;

pub use copy::{find_gadget_copy, gadget_copy_premise, verify_copy, EmbeddedCopy, PremiseCheck};
pub use equipartition::{check_equipartition_hitting, equipartitions, EQUIPARTITION_MAX_K};
pub use same_union::{find_same_union, SameUnionQuad};
pub use sunflower::{find_sunflower, sunflower_free_family, Sunflower, SunflowerSearch, SUNFLOWER_EXHAUSTIVE_LIMIT};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypergraph is not {0}-uniform")]
    NotUniform(usize),
}
