//! Regular subgraphs of uniform hypergraphs.
//!
//! * [`hypercore`]: the [`Hypergraph`] model, `.hg` I/O, degrees, links, matchings.
//! * [`regdetect`]: exact search for `r`-regular subgraphs with checkable certificates.
//! * [`gadgets`]: the extremal constructions (stars, `H(k,l)`, transversal families,
//!   the two-star construction over a Brown–Erdős–Sós-free hypergraph).
//! * [`patterns`]: sunflowers, same-union pairs, embedded gadget copies, equipartition
//!   hitting families.
//! * [`extremal`]: exhaustive extremal search, wedge counts, good/bad 3-sets.
//! * [`cli`]: the `regulus` command-line front end.

pub mod cli;
pub mod extremal;
pub mod gadgets;
pub mod hypercore;
pub mod patterns;
pub mod regdetect;
pub mod util;

pub use hypercore::{Edge, Hypergraph, Vertex};
pub use regdetect::{find_regular, verify_certificate, Certificate, Detection, SolverBudget};
