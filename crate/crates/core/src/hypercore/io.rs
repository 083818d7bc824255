//! The `.hg` text format.
//!
//! ```text
//! # optional comments
//! n m
//! v v v      <- m lines, one edge each
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Serialization writes the
//! header and the edges in colex order, nothing else, so it is canonical.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use super::{Edge, Hypergraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected `n m`")]
    MalformedHeader { line: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: `{token}` is not a vertex id")]
    BadToken { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: Vertex, n: usize },
    #[error("line {line}: vertex {vertex} repeated within an edge")]
    RepeatedVertex { line: usize, vertex: Vertex },
    #[error("lines {first_line} and {second_line} hold the same edge")]
    DuplicateEdge { first_line: usize, second_line: usize },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses `.hg` text into a hypergraph in canonical order.
pub fn parse(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return Err(ParseError::MalformedHeader { line: hline }),
        },
        _ => return Err(ParseError::MalformedHeader { line: hline }),
    };

    let mut edges = Vec::with_capacity(m);
    let mut line_of = Vec::with_capacity(m);
    for (line, body) in lines {
        let mut verts = Vec::new();
        for tok in body.split_whitespace() {
            let v: Vertex = tok.parse().map_err(|_| ParseError::BadToken {
                line,
                token: tok.to_string(),
            })?;
            if v >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: v, n });
            }
            verts.push(v);
        }
        verts.sort_unstable();
        if let Some(w) = verts.windows(2).find(|w| w[0] == w[1]) {
            return Err(ParseError::RepeatedVertex { line, vertex: w[0] });
        }
        edges.push(Edge::from_sorted(&verts));
        line_of.push(line);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Hypergraph::from_checked(n, edges).map_err(|(a, b)| ParseError::DuplicateEdge {
        first_line: line_of[a],
        second_line: line_of[b],
    })
}

/// Canonical `.hg` text. An empty edge would serialize as a blank line, which
/// `parse` skips; such edges only arise from links and are not meant for files.
pub fn serialize(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", h.n(), h.num_edges()).unwrap();
    for e in h.edges() {
        writeln!(out, "{e}").unwrap();
    }
    out
}

impl FromStr for Hypergraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Hypergraph, ParseError> {
        parse(s)
    }
}

impl Hypergraph {
    pub fn parse(text: &str) -> Result<Hypergraph, ParseError> {
        parse(text)
    }

    pub fn to_hg_string(&self) -> String {
        serialize(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let h = parse("4 2\n0 1 2\n1 2 3\n").unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edges().iter().map(|e| e.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1, 2], vec![1, 2, 3]]);

        let empty = parse("3 0\n").unwrap();
        assert_eq!((empty.n(), empty.num_edges()), (3, 0));

        assert_eq!(
            parse("4 2\n0 1 2\n2 1 0\n"),
            Err(ParseError::DuplicateEdge { first_line: 2, second_line: 3 })
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse(""), Err(ParseError::MissingHeader));
        assert_eq!(parse("4\n"), Err(ParseError::MalformedHeader { line: 1 }));
        assert_eq!(parse("x 1\n0\n"), Err(ParseError::MalformedHeader { line: 1 }));
        assert_eq!(
            parse("3 1\n0 5\n"),
            Err(ParseError::VertexOutOfRange { line: 2, vertex: 5, n: 3 })
        );
        assert_eq!(parse("3 1\n1 1\n"), Err(ParseError::RepeatedVertex { line: 2, vertex: 1 }));
        assert_eq!(
            parse("3 2\n0 1\n"),
            Err(ParseError::EdgeCountMismatch { expected: 2, found: 1 })
        );
        assert!(matches!(parse("3 1\n0 a\n"), Err(ParseError::BadToken { line: 2, .. })));
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let h = parse("# fano-ish\n\n3 1\n# edge\n0 2\n\n").unwrap();
        assert_eq!(h.num_edges(), 1);
        assert_eq!(serialize(&h), "3 1\n0 2\n");
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..140).prop_flat_map(|n| {
            prop::collection::btree_set(prop::collection::btree_set(0..n, 1..5), 0..12)
                .prop_map(move |edges| Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect::<Vec<_>>())).unwrap())
        })
    }

    proptest! {
        #[test]
        fn serialize_parse_round_trip(h in arb_hypergraph()) {
            let text = serialize(&h);
            prop_assert_eq!(parse(&text).unwrap(), h);
        }
    }
}
