//! Line-based graph file format.
//!
//! ```text
//! # comment
//! kind oriented | kind 2ec | kind graph
//! n <count>
//! arc <u> <v>          (oriented)
//! edge <u> <v> <r|b>   (2ec)
//! edge <u> <v>         (graph)
//! map <src> <dst>      (homomorphism witnesses only)
//! ```
//!
//! Comment lines of the form `# label <vertex> <role>` are collected into
//! [`GraphDocument::labels`]; all other comments are ignored.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{
    Colour, GraphError, GraphKind, MixedGraph, OrientedGraph, ParsedGraph, SimpleGraph,
    TwoEdgeColouredGraph, VertexId,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error("line {line}: `map` lines are only allowed in homomorphism witnesses")]
    UnexpectedMap { line: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// A parsed graph file together with its optional mapping and label lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: ParsedGraph,
    pub map: Vec<(VertexId, VertexId)>,
    pub labels: Vec<(VertexId, String)>,
}

/// Parses a graph file, rejecting `map` lines.
pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let doc = parse_document(text)?;
    if !doc.map.is_empty() {
        let line = text
            .lines()
            .position(|l| l.trim_start().starts_with("map"))
            .map_or(0, |i| i + 1);
        return Err(ParseError::UnexpectedMap { line });
    }
    Ok(doc.graph)
}

pub fn parse_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut kind = None;
    let mut n = None;
    let mut pairs: Vec<(usize, VertexId, VertexId, Option<Colour>)> = Vec::new();
    let mut map = Vec::new();
    let mut labels = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let mut parts = comment.split_whitespace();
            if parts.next() == Some("label") {
                if let (Some(v), Some(role)) = (parts.next(), parts.next()) {
                    let v = parse_index(v, line)?;
                    labels.push((v, role.to_string()));
                }
            }
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match (kind, n) {
            (None, _) => {
                let k = match fields.as_slice() {
                    ["kind", "oriented"] => GraphKind::Oriented,
                    ["kind", "2ec"] => GraphKind::Coloured,
                    ["kind", "graph"] => GraphKind::Simple,
                    ["kind", other] => return Err(syntax(line, format!("unknown kind `{other}`"))),
                    _ => return Err(syntax(line, "expected `kind oriented|2ec|graph`")),
                };
                kind = Some(k);
            }
            (Some(_), None) => match fields.as_slice() {
                ["n", count] => n = Some(parse_index(count, line)?),
                _ => return Err(syntax(line, "expected `n <count>`")),
            },
            (Some(k), Some(_)) => match (k, fields.as_slice()) {
                (_, ["map", a, b]) => map.push((parse_index(a, line)?, parse_index(b, line)?)),
                (GraphKind::Oriented, ["arc", u, v]) => {
                    pairs.push((line, parse_index(u, line)?, parse_index(v, line)?, None))
                }
                (GraphKind::Simple, ["edge", u, v]) => {
                    pairs.push((line, parse_index(u, line)?, parse_index(v, line)?, None))
                }
                (GraphKind::Coloured, ["edge", u, v, c]) => {
                    let colour = match *c {
                        "r" => Colour::Red,
                        "b" => Colour::Blue,
                        other => return Err(syntax(line, format!("unknown colour `{other}`"))),
                    };
                    pairs.push((
                        line,
                        parse_index(u, line)?,
                        parse_index(v, line)?,
                        Some(colour),
                    ))
                }
                _ => {
                    return Err(syntax(
                        line,
                        format!("unexpected line for a `{}` file: `{trimmed}`", k.keyword()),
                    ))
                }
            },
        }
    }

    let kind = kind.ok_or(ParseError::Missing("kind"))?;
    let n = n.ok_or(ParseError::Missing("n"))?;
    let mut seen = HashSet::with_capacity(pairs.len());
    for &(line, u, v, _) in &pairs {
        let invalid = |source| ParseError::Invalid { line, source };
        for w in [u, v] {
            if w >= n {
                return Err(invalid(GraphError::VertexOutOfRange { vertex: w, n }));
            }
        }
        if u == v {
            return Err(invalid(GraphError::Loop(u)));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            let digon = kind == GraphKind::Oriented
                && !pairs.iter().any(|p| p.0 < line && (p.1, p.2) == (u, v));
            return Err(invalid(if digon {
                GraphError::Digon(key.0, key.1)
            } else {
                GraphError::DuplicateEdge(key.0, key.1)
            }));
        }
    }
    let built = match kind {
        GraphKind::Simple => {
            SimpleGraph::new(n, pairs.iter().map(|p| (p.1, p.2))).map(ParsedGraph::from)
        }
        GraphKind::Oriented => {
            OrientedGraph::new(n, pairs.iter().map(|p| (p.1, p.2))).map(ParsedGraph::from)
        }
        GraphKind::Coloured => TwoEdgeColouredGraph::new(
            n,
            pairs
                .iter()
                .map(|p| (p.1, p.2, p.3.expect("coloured edge lines carry a colour"))),
        )
        .map(ParsedGraph::from),
    };
    let graph = built.expect("edge lines were validated above");
    Ok(GraphDocument { graph, map, labels })
}

fn parse_index(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse::<usize>().map_err(|_| {
        syntax(
            line,
            format!("expected a non-negative integer, found `{token}`"),
        )
    })
}

/// Canonical text form: header, then edges in sorted order.
pub fn serialize_graph(g: &ParsedGraph) -> String {
    g.to_string()
}

fn header(f: &mut fmt::Formatter<'_>, kind: GraphKind, n: usize) -> fmt::Result {
    writeln!(f, "kind {}", kind.keyword())?;
    writeln!(f, "n {n}")
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        header(f, GraphKind::Simple, self.n())?;
        for &(u, v) in self.edges() {
            writeln!(f, "edge {u} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Display for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        header(f, GraphKind::Oriented, self.n())?;
        for &(u, v) in self.arcs() {
            writeln!(f, "arc {u} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Display for TwoEdgeColouredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        header(f, GraphKind::Coloured, self.n())?;
        let mut buf = String::new();
        for &(u, v, c) in self.edges() {
            writeln!(buf, "edge {u} {v} {}", c.symbol())?;
        }
        f.write_str(&buf)
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MixedGraph::Oriented(g) => g.fmt(f),
            MixedGraph::Coloured(g) => g.fmt(f),
        }
    }
}

impl fmt::Display for ParsedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedGraph::Simple(g) => g.fmt(f),
            ParsedGraph::Mixed(g) => g.fmt(f),
        }
    }
}
