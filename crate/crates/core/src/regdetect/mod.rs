//! Deciding whether a hypergraph has an `r`-regular subgraph.
//!
//! An `r`-regular subgraph is a nonempty set of distinct edges that covers every
//! vertex of its union exactly `r` times. [`find_regular`] is an exact
//! branch-and-propagate search; it either returns a [`Certificate`], proves that
//! none exists, or reports that its budget ran out. [`verify_certificate`]
//! rechecks a certificate by plain degree counting and shares no code with the
//! search. [`brute_force_regular`] is the subset-enumeration oracle used to test
//! the solver.

mod brute;
mod solver;

pub use brute::{brute_force_regular, BRUTE_FORCE_MAX_EDGES};
pub use solver::{find_regular, find_regular_parallel, find_regular_through, Solver};

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::hypercore::{Hypergraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("regularity must be at least 2, got {0}")]
    RegularityTooSmall(usize),
    #[error("budget caps must be positive")]
    InvalidBudget,
    #[error("brute force is limited to {max} edges, got {got}")]
    TooManyEdges { got: usize, max: usize },
    #[error("edge index {0} out of range")]
    EdgeIndexOutOfRange(usize),
}

/// Limits on a single search. `None` means unbounded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverBudget {
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
}

impl SolverBudget {
    pub fn unbounded() -> SolverBudget {
        SolverBudget::default()
    }

    pub fn nodes(max_nodes: u64) -> SolverBudget {
        SolverBudget {
            max_nodes: Some(max_nodes),
            max_millis: None,
        }
    }

    pub fn millis(max_millis: u64) -> SolverBudget {
        SolverBudget {
            max_nodes: None,
            max_millis: Some(max_millis),
        }
    }

    pub(crate) fn validate(&self) -> Result<(), DetectError> {
        if self.max_nodes == Some(0) || self.max_millis == Some(0) {
            Err(DetectError::InvalidBudget)
        } else {
            Ok(())
        }
    }

    pub(crate) fn time_limit(&self) -> Option<Duration> {
        self.max_millis.map(Duration::from_millis)
    }
}

/// A set of edges claimed to form an `r`-regular subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    /// Ascending indices into the host's colex edge order.
    pub edge_indices: Vec<usize>,
    /// Ascending union of the chosen edges.
    pub covered: Vec<Vertex>,
    pub r: usize,
}

impl Certificate {
    /// Builds a certificate from edge indices, deriving the covered set.
    pub fn from_edges(h: &Hypergraph, mut edge_indices: Vec<usize>, r: usize) -> Certificate {
        edge_indices.sort_unstable();
        let mut covered: Vec<Vertex> = edge_indices
            .iter()
            .filter(|&&i| i < h.num_edges())
            .flat_map(|&i| h.edge(i).iter())
            .collect();
        covered.sort_unstable();
        covered.dedup();
        Certificate { edge_indices, covered, r }
    }

    pub fn len(&self) -> usize {
        self.edge_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_indices.is_empty()
    }

    /// Three-line text form: `r |S|`, the edge indices, the covered vertices.
    pub fn to_cert_string(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        format!(
            "{} {}\n{}\n{}\n",
            self.r,
            self.edge_indices.len(),
            join(&self.edge_indices),
            join(&self.covered)
        )
    }

    pub fn parse(text: &str) -> Result<Certificate, CertificateParseError> {
        let mut lines = text.lines();
        let mut numbers = |what: &'static str| -> Result<Vec<usize>, CertificateParseError> {
            let line = lines.next().ok_or(CertificateParseError::MissingLine(what))?;
            line.split_whitespace()
                .map(|t| t.parse().map_err(|_| CertificateParseError::BadToken(t.to_string())))
                .collect()
        };
        let header = numbers("header")?;
        let [r, size] = header[..] else {
            return Err(CertificateParseError::MalformedHeader);
        };
        let edge_indices = numbers("edge indices")?;
        let covered = numbers("covered vertices")?;
        if edge_indices.len() != size {
            return Err(CertificateParseError::SizeMismatch {
                expected: size,
                found: edge_indices.len(),
            });
        }
        Ok(Certificate { edge_indices, covered, r })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateParseError {
    #[error("certificate is missing its {0} line")]
    MissingLine(&'static str),
    #[error("certificate header must be `r size`")]
    MalformedHeader,
    #[error("`{0}` is not a number")]
    BadToken(String),
    #[error("header announces {expected} edges, found {found}")]
    SizeMismatch { expected: usize, found: usize },
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateFault {
    Empty,
    IndexOutOfRange(usize),
    DuplicateIndex(usize),
    EmptyEdge(usize),
    /// Some covered vertex is not hit exactly `r` times.
    DegreeViolated { vertex: Vertex, degree: usize },
    /// The `covered` field is not the union of the chosen edges.
    CoveredMismatch,
}

impl fmt::Display for CertificateFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFault::Empty => write!(f, "empty"),
            CertificateFault::IndexOutOfRange(i) => write!(f, "edge index {i} out of range"),
            CertificateFault::DuplicateIndex(i) => write!(f, "edge index {i} repeated"),
            CertificateFault::EmptyEdge(i) => write!(f, "edge {i} is empty"),
            CertificateFault::DegreeViolated { vertex, degree } => {
                write!(f, "degree r violated: vertex {vertex} has degree {degree}")
            }
            CertificateFault::CoveredMismatch => write!(f, "covered set is not the union of the edges"),
        }
    }
}

impl std::error::Error for CertificateFault {}

/// Recounts degrees from scratch and checks every certificate invariant.
pub fn verify_certificate(h: &Hypergraph, c: &Certificate) -> Result<(), CertificateFault> {
    if c.edge_indices.is_empty() {
        return Err(CertificateFault::Empty);
    }
    let mut seen = vec![false; h.num_edges()];
    let mut degree = vec![0usize; h.n()];
    for &i in &c.edge_indices {
        if i >= h.num_edges() {
            return Err(CertificateFault::IndexOutOfRange(i));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(CertificateFault::DuplicateIndex(i));
        }
        if h.edge(i).is_empty() {
            return Err(CertificateFault::EmptyEdge(i));
        }
        for v in h.edge(i).iter() {
            degree[v] += 1;
        }
    }
    if let Some((vertex, &d)) = degree.iter().enumerate().find(|(_, &d)| d != 0 && d != c.r) {
        return Err(CertificateFault::DegreeViolated { vertex, degree: d });
    }
    let union: Vec<Vertex> = (0..h.n()).filter(|&v| degree[v] > 0).collect();
    let mut claimed = c.covered.clone();
    claimed.sort_unstable();
    if union != claimed {
        return Err(CertificateFault::CoveredMismatch);
    }
    Ok(())
}

/// Result of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detection {
    Found(Certificate),
    /// The search finished without finding one: a proof of absence.
    NoneExists,
    /// Inconclusive; the budget ran out after this many nodes.
    BudgetExhausted { nodes: u64 },
}

impl Detection {
    pub fn is_found(&self) -> bool {
        matches!(self, Detection::Found(_))
    }

    pub fn is_none(&self) -> bool {
        matches!(self, Detection::NoneExists)
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Detection::Found(c) => Some(c),
            _ => None,
        }
    }
}

pub(crate) fn check_r(r: usize) -> Result<(), DetectError> {
    if r < 2 {
        Err(DetectError::RegularityTooSmall(r))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn verify_accepts_and_rejects() {
        let h = star();
        let all = Certificate::from_edges(&h, vec![0, 1, 2, 3], 3);
        assert_eq!(verify_certificate(&h, &all), Ok(()));

        let short = Certificate::from_edges(&h, vec![0, 1, 2], 3);
        assert!(matches!(
            verify_certificate(&h, &short),
            Err(CertificateFault::DegreeViolated { .. })
        ));
        assert!(verify_certificate(&h, &short).unwrap_err().to_string().starts_with("degree r violated"));

        let empty = Certificate { edge_indices: vec![], covered: vec![], r: 3 };
        assert_eq!(verify_certificate(&h, &empty), Err(CertificateFault::Empty));

        let mut wrong_cover = all.clone();
        wrong_cover.covered.pop();
        assert_eq!(verify_certificate(&h, &wrong_cover), Err(CertificateFault::CoveredMismatch));

        let dup = Certificate { edge_indices: vec![0, 0], covered: vec![0, 1, 2], r: 2 };
        assert_eq!(verify_certificate(&h, &dup), Err(CertificateFault::DuplicateIndex(0)));

        let oob = Certificate { edge_indices: vec![9], covered: vec![], r: 2 };
        assert_eq!(verify_certificate(&h, &oob), Err(CertificateFault::IndexOutOfRange(9)));
    }

    #[test]
    fn certificate_text_round_trip() {
        let h = star();
        let c = Certificate::from_edges(&h, vec![3, 0, 1, 2], 3);
        let text = c.to_cert_string();
        assert_eq!(text, "3 4\n0 1 2 3\n0 1 2 3\n");
        assert_eq!(Certificate::parse(&text).unwrap(), c);
        assert_eq!(Certificate::parse("3\n1\n0\n"), Err(CertificateParseError::MalformedHeader));
        assert!(matches!(
            Certificate::parse("2 2\n1\n0 1\n"),
            Err(CertificateParseError::SizeMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn budget_validation() {
        assert!(SolverBudget::unbounded().validate().is_ok());
        assert_eq!(SolverBudget::nodes(0).validate(), Err(DetectError::InvalidBudget));
        assert_eq!(SolverBudget::millis(0).validate(), Err(DetectError::InvalidBudget));
    }
}
