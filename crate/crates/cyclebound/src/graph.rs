//! Loopless multigraphs with a plain-text edge-list format.
//!
//! The text format is line oriented:
//!
//! ```text
//! # comment lines start with '#', blank lines are ignored
//! n m [multi]          header: vertex count, edge-record count, format flag
//! u v [mult]           m edge records, 0-based endpoints; mult needs "multi"
//! ```
//!
//! The header's `m` counts edge *records* (lines); the mathematical edge
//! count of a multigraph — what the bounds call m — is the sum of
//! multiplicities, exposed as [`Graph::edge_count`]. Records are merged and
//! sorted on construction, so parsing followed by [`Graph::serialize`]
//! yields a canonical byte-stable form. Parse errors carry 1-based line
//! numbers.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use thiserror::Error;

/// One merged edge record: endpoints `u < v` with multiplicity ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    pub mult: u32,
}

/// Structural validation failure when building a graph.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {u}; loopless multigraphs only")]
    LoopEdge { u: u32 },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: u32, n: usize },
    #[error("edge {u}-{v} has multiplicity 0; every record needs mult >= 1")]
    ZeroMultiplicity { u: u32, v: u32 },
}

/// What went wrong on a specific line of the text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    MalformedHeader,
    BadNumber(String),
    WrongFieldCount { found: usize },
    MultiplicityInSimpleFormat,
    DuplicateEdgeInSimpleFormat { u: u32, v: u32 },
    MissingEdges { expected: usize, found: usize },
    ExtraEdgeLine { expected: usize },
    Graph(GraphError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingHeader => write!(f, "missing header line `n m [multi]`"),
            ParseErrorKind::MalformedHeader => {
                write!(f, "header must be `n m` or `n m multi`")
            }
            ParseErrorKind::BadNumber(tok) => write!(f, "not a number: {tok:?}"),
            ParseErrorKind::WrongFieldCount { found } => {
                write!(f, "expected `u v` or `u v mult`, found {found} fields")
            }
            ParseErrorKind::MultiplicityInSimpleFormat => {
                write!(f, "multiplicity field present but header lacks `multi`")
            }
            ParseErrorKind::DuplicateEdgeInSimpleFormat { u, v } => {
                write!(f, "edge {u}-{v} repeated in simple format")
            }
            ParseErrorKind::MissingEdges { expected, found } => {
                write!(f, "header promised {expected} edge records, found {found}")
            }
            ParseErrorKind::ExtraEdgeLine { expected } => {
                write!(f, "more edge records than the {expected} promised by the header")
            }
            ParseErrorKind::Graph(e) => write!(f, "{e}"),
        }
    }
}

/// Parse failure with its 1-based source line.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// A loopless multigraph with merged, sorted edge records and adjacency
/// lists ordered by neighbor index (the canonical enumeration order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(u32, u32)>>,
    degrees: Vec<u64>,
}

impl Graph {
    /// Build a graph from `(u, v, mult)` triples, validating endpoints and
    /// multiplicities and merging duplicate records.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (u32, u32, u32)>,
    ) -> Result<Graph, GraphError> {
        let mut records: Vec<Edge> = Vec::new();
        for (u, v, mult) in edges {
            if u == v {
                return Err(GraphError::LoopEdge { u });
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            if mult == 0 {
                return Err(GraphError::ZeroMultiplicity { u, v });
            }
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            records.push(Edge { u, v, mult });
        }
        records.sort_by_key(|e| (e.u, e.v));
        let mut merged: Vec<Edge> = Vec::with_capacity(records.len());
        for e in records {
            match merged.last_mut() {
                Some(last) if last.u == e.u && last.v == e.v => last.mult += e.mult,
                _ => merged.push(e),
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut degrees = vec![0u64; n];
        for e in &merged {
            adj[e.u as usize].push((e.v, e.mult));
            adj[e.v as usize].push((e.u, e.mult));
            degrees[e.u as usize] += u64::from(e.mult);
            degrees[e.v as usize] += u64::from(e.mult);
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(v, _)| v);
        }
        Ok(Graph {
            n,
            edges: merged,
            adj,
            degrees,
        })
    }

    /// Build a simple graph from endpoint pairs.
    pub fn simple(n: usize, pairs: &[(u32, u32)]) -> Result<Graph, GraphError> {
        Graph::new(n, pairs.iter().map(|&(u, v)| (u, v, 1)))
    }

    /// The complete simple graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                pairs.push((u, v));
            }
        }
        Graph::simple(n, &pairs).expect("complete graph is always valid")
    }

    /// Parse the text format. Errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(ParseError {
            line: 1,
            kind: ParseErrorKind::MissingHeader,
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let multi = match fields.as_slice() {
            [_, _] => false,
            [_, _, flag] if *flag == "multi" => true,
            _ => {
                return Err(ParseError {
                    line: header_line,
                    kind: ParseErrorKind::MalformedHeader,
                })
            }
        };
        let n: usize = parse_number(fields[0], header_line)?;
        let m: usize = parse_number(fields[1], header_line)?;

        let mut triples: Vec<(u32, u32, u32)> = Vec::with_capacity(m);
        let mut seen_simple: std::collections::HashSet<(u32, u32)> = Default::default();
        let mut found = 0usize;
        for (line_no, line) in lines {
            if found == m {
                return Err(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::ExtraEdgeLine { expected: m },
                });
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (u, v, mult) = match fields.as_slice() {
                [u, v] => (
                    parse_number::<u32>(u, line_no)?,
                    parse_number::<u32>(v, line_no)?,
                    1,
                ),
                [u, v, mult] => {
                    if !multi {
                        return Err(ParseError {
                            line: line_no,
                            kind: ParseErrorKind::MultiplicityInSimpleFormat,
                        });
                    }
                    (
                        parse_number::<u32>(u, line_no)?,
                        parse_number::<u32>(v, line_no)?,
                        parse_number::<u32>(mult, line_no)?,
                    )
                }
                other => {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::WrongFieldCount { found: other.len() },
                    })
                }
            };
            if !multi {
                let key = (u.min(v), u.max(v));
                if !seen_simple.insert(key) {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::DuplicateEdgeInSimpleFormat { u: key.0, v: key.1 },
                    });
                }
            }
            // Structural validation per line so the error is attributed to
            // its source line.
            if u == v {
                return Err(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::Graph(GraphError::LoopEdge { u }),
                });
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::Graph(GraphError::VertexOutOfRange { v: w, n }),
                    });
                }
            }
            if mult == 0 {
                return Err(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::Graph(GraphError::ZeroMultiplicity {
                        u: u.min(v),
                        v: u.max(v),
                    }),
                });
            }
            triples.push((u, v, mult));
            found += 1;
        }
        if found < m {
            let last_line = text.lines().count().max(1);
            return Err(ParseError {
                line: last_line,
                kind: ParseErrorKind::MissingEdges {
                    expected: m,
                    found,
                },
            });
        }
        Graph::new(n, triples).map_err(|e| ParseError {
            line: header_line,
            kind: ParseErrorKind::Graph(e),
        })
    }

    /// Canonical text form: merged records sorted by endpoints; the `multi`
    /// flag and multiplicity fields appear exactly when some multiplicity
    /// exceeds one. Ends with a newline.
    pub fn serialize(&self) -> String {
        let multi = !self.is_simple();
        let mut out = String::new();
        if multi {
            out.push_str(&format!("{} {} multi\n", self.n, self.edges.len()));
            for e in &self.edges {
                out.push_str(&format!("{} {} {}\n", e.u, e.v, e.mult));
            }
        } else {
            out.push_str(&format!("{} {}\n", self.n, self.edges.len()));
            for e in &self.edges {
                out.push_str(&format!("{} {}\n", e.u, e.v));
            }
        }
        out
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Total number of edges counted with multiplicity (the m of the
    /// bounds).
    pub fn edge_count(&self) -> u64 {
        self.edges.iter().map(|e| u64::from(e.mult)).sum()
    }

    /// Merged edge records.
    pub fn edge_records(&self) -> &[Edge] {
        &self.edges
    }

    /// Degree of `v` counted with multiplicity.
    pub fn degree(&self, v: usize) -> u64 {
        self.degrees[v]
    }

    /// Smallest vertex degree (0 for the empty graph).
    pub fn min_degree(&self) -> u64 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Largest vertex degree (0 for the empty graph).
    pub fn max_degree(&self) -> u64 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Average degree 2m/n as an exact rational. `None` for n = 0.
    pub fn average_degree(&self) -> Option<BigRational> {
        if self.n == 0 {
            return None;
        }
        Some(BigRational::new(
            (2u64 * self.edge_count()).into(),
            (self.n as u64).into(),
        ))
    }

    /// Whether every multiplicity is 1.
    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|e| e.mult == 1)
    }

    /// Adjacency list of `v`: `(neighbor, multiplicity)` sorted by
    /// neighbor.
    pub fn neighbors(&self, v: usize) -> &[(u32, u32)] {
        &self.adj[v]
    }

    /// Multiplicity of the edge `u-v` (0 if absent).
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.adj[u]
            .binary_search_by_key(&(v as u32), |&(w, _)| w)
            .map(|i| self.adj[u][i].1)
            .unwrap_or(0)
    }

    /// A copy with one instance of the edge `u-v` removed. `None` if the
    /// edge is absent.
    pub fn remove_edge_instance(&self, u: u32, v: u32) -> Option<Graph> {
        let (u, v) = (u.min(v), u.max(v));
        let idx = self
            .edges
            .binary_search_by_key(&(u, v), |e| (e.u, e.v))
            .ok()?;
        let triples = self.edges.iter().enumerate().filter_map(|(i, e)| {
            let mult = if i == idx { e.mult - 1 } else { e.mult };
            (mult > 0).then_some((e.u, e.v, mult))
        });
        Some(Graph::new(self.n, triples).expect("removing an edge keeps the graph valid"))
    }

    /// Total count of labelled edge instances as a big integer, convenient
    /// for bound arithmetic.
    pub fn edge_count_big(&self) -> BigUint {
        BigUint::from(self.edge_count())
    }
}

fn parse_number<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, ParseError> {
    tok.parse().map_err(|_| ParseError {
        line,
        kind: ParseErrorKind::BadNumber(tok.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_triangle() {
        let g = Graph::parse("3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_simple());
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.multiplicity(0, 2), 1);
        assert_eq!(g.multiplicity(0, 0), 0);
    }

    #[test]
    fn parse_with_comments_and_blanks() {
        let text = "# tripled edge\n\n2 1 multi\n# record below\n0 1 3\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edge_records(), &[Edge { u: 0, v: 1, mult: 3 }]);
        assert!(!g.is_simple());
        assert_eq!(g.degree(0), 3);
    }

    #[test]
    fn canonical_serialization_merges_and_sorts() {
        let g = Graph::new(4, [(2, 0, 1), (1, 0, 1), (0, 2, 2)]).unwrap();
        assert_eq!(g.serialize(), "4 2 multi\n0 1 1\n0 2 3\n");
        let simple = Graph::simple(3, &[(2, 1), (0, 2)]).unwrap();
        assert_eq!(simple.serialize(), "3 2\n0 2\n1 2\n");
        // Round trip is canonical.
        let reparsed = Graph::parse(&g.serialize()).unwrap();
        assert_eq!(reparsed, g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Graph::parse("").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingHeader);

        let err = Graph::parse("3 nonsense\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(matches!(err.kind, ParseErrorKind::BadNumber(_)));

        let err = Graph::parse("3 1 multiX\n0 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MalformedHeader);

        let err = Graph::parse("3 2\n0 1\n1 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::Graph(GraphError::LoopEdge { u: 1 }));

        let err = Graph::parse("3 2\n0 1\n1 7\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(
            err.kind,
            ParseErrorKind::Graph(GraphError::VertexOutOfRange { v: 7, n: 3 })
        );

        let err = Graph::parse("3 1\n0 1 2\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::MultiplicityInSimpleFormat);

        let err = Graph::parse("3 2 multi\n0 1 1\n0 1 0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(
            err.kind,
            ParseErrorKind::Graph(GraphError::ZeroMultiplicity { u: 0, v: 1 })
        );

        let err = Graph::parse("3 2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(
            err.kind,
            ParseErrorKind::DuplicateEdgeInSimpleFormat { u: 0, v: 1 }
        );

        let err = Graph::parse("3 3\n0 1\n1 2\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::MissingEdges {
                expected: 3,
                found: 2
            }
        );

        let err = Graph::parse("3 1\n0 1\n1 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::ExtraEdgeLine { expected: 1 });

        let err = Graph::parse("2 1\n0 1 junk extra\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::WrongFieldCount { found: 4 });
    }

    #[test]
    fn complete_graph_and_accessors() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.min_degree(), 3);
        assert_eq!(k4.max_degree(), 3);
        assert_eq!(
            k4.average_degree(),
            Some(BigRational::from_integer(3.into()))
        );
        assert_eq!(k4.neighbors(0), &[(1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn remove_edge_instance_decrements() {
        let g = Graph::new(2, [(0, 1, 3)]).unwrap();
        let g2 = g.remove_edge_instance(1, 0).unwrap();
        assert_eq!(g2.multiplicity(0, 1), 2);
        let g1 = g2
            .remove_edge_instance(0, 1)
            .unwrap()
            .remove_edge_instance(0, 1)
            .unwrap();
        assert_eq!(g1.edge_count(), 0);
        assert!(g1.remove_edge_instance(0, 1).is_none());
    }
}
