//! Canonical JSON and edge-list formats.
//!
//! JSON: `{"vertices":n,"edges":[[u,v],...],"token":t}` with `u < v` and
//! edges sorted; directed boards use `"arcs"` with `[tail, head]` pairs.
//! Edge list: a header line `ug <n> <token>` or `gg <n> <token>`, then one
//! `u v` pair per line.

use super::{DirectedGraph, DirectedPosition, Graph, GraphError, Position, MAX_VERTICES};
use serde::Deserialize;
use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    EdgeList,
}

impl Format {
    /// JSON if the first non-blank byte is `{`, edge list otherwise.
    pub fn detect(text: &[u8]) -> Format {
        match text.iter().find(|b| !b.is_ascii_whitespace()) {
            Some(b'{') => Format::Json,
            _ => Format::EdgeList,
        }
    }
}

/// Where in the input a problem was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// 1-based line and column.
    Line { line: usize, column: usize },
    /// Index into the JSON `edges`/`arcs` array.
    Entry(usize),
    /// The `token` field.
    Token,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line { line, column } => write!(f, "line {line}, column {column}"),
            Location::Entry(i) => write!(f, "entry {i}"),
            Location::Token => f.write_str("token"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at {at}: {message}")]
    Syntax { at: Location, message: String },
    #[error("vertex {vertex} out of range (n = {vertex_count}) at {at}")]
    OutOfRange {
        vertex: u64,
        vertex_count: usize,
        at: Location,
    },
    #[error("self-loop at vertex {vertex} at {at}")]
    SelfLoop { vertex: usize, at: Location },
    #[error("duplicate edge {u}-{v} at {at}")]
    DuplicateEdge { u: usize, v: usize, at: Location },
    #[error("expected {expected} board, found {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("{0} vertices exceeds the limit of {MAX_VERTICES}")]
    TooLarge(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedPosition {
    Undirected(Position),
    Directed(DirectedPosition),
}

impl ParsedPosition {
    fn kind(&self) -> &'static str {
        match self {
            ParsedPosition::Undirected(_) => "undirected",
            ParsedPosition::Directed(_) => "directed",
        }
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<ParsedPosition, ParseError> {
    match format {
        Format::Json => parse_json(text),
        Format::EdgeList => parse_edgelist(text),
    }
}

/// Parses an undirected board; directed inputs are rejected.
pub fn parse_position(text: &[u8], format: Format) -> Result<Position, ParseError> {
    match parse_graph(text, format)? {
        ParsedPosition::Undirected(p) => Ok(p),
        other => Err(ParseError::WrongKind {
            expected: "undirected",
            found: other.kind(),
        }),
    }
}

/// Parses a directed board; undirected inputs are rejected.
pub fn parse_directed(text: &[u8], format: Format) -> Result<DirectedPosition, ParseError> {
    match parse_graph(text, format)? {
        ParsedPosition::Directed(p) => Ok(p),
        other => Err(ParseError::WrongKind {
            expected: "directed",
            found: other.kind(),
        }),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBoard {
    vertices: u64,
    #[serde(default)]
    edges: Option<Vec<[u64; 2]>>,
    #[serde(default)]
    arcs: Option<Vec<[u64; 2]>>,
    token: u64,
}

fn parse_json(text: &[u8]) -> Result<ParsedPosition, ParseError> {
    let raw: RawBoard = serde_json::from_slice(text).map_err(|e| ParseError::Syntax {
        at: Location::Line {
            line: e.line(),
            column: e.column(),
        },
        message: e.to_string(),
    })?;
    let n = checked_count(raw.vertices)?;
    let (pairs, directed) = match (raw.edges, raw.arcs) {
        (Some(e), None) => (e, false),
        (None, Some(a)) => (a, true),
        (Some(_), Some(_)) => {
            return Err(ParseError::Syntax {
                at: Location::Line { line: 1, column: 1 },
                message: "both \"edges\" and \"arcs\" present".into(),
            })
        }
        (None, None) => {
            return Err(ParseError::Syntax {
                at: Location::Line { line: 1, column: 1 },
                message: "missing \"edges\" or \"arcs\"".into(),
            })
        }
    };
    let pairs = pairs
        .into_iter()
        .enumerate()
        .map(|(i, [u, v])| (Location::Entry(i), u, v));
    build(n, raw.token, Location::Token, pairs, directed)
}

fn parse_edgelist(text: &[u8]) -> Result<ParsedPosition, ParseError> {
    let text = std::str::from_utf8(text).map_err(|e| ParseError::Syntax {
        at: Location::Line { line: 1, column: 1 },
        message: format!("invalid UTF-8: {e}"),
    })?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::Syntax {
        at: Location::Line { line: 1, column: 1 },
        message: "empty input".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let directed = match fields.first() {
        Some(&"ug") => false,
        Some(&"gg") => true,
        _ => {
            return Err(ParseError::Syntax {
                at: Location::Line {
                    line: hline,
                    column: 1,
                },
                message: "header must start with `ug` or `gg`".into(),
            })
        }
    };
    if fields.len() != 3 {
        return Err(ParseError::Syntax {
            at: Location::Line {
                line: hline,
                column: 1,
            },
            message: "header must be `ug|gg <n> <token>`".into(),
        });
    }
    let n = parse_int(fields[1], hline, column_of(header, fields[1]))?;
    let token = parse_int(fields[2], hline, column_of(header, fields[2]))?;
    let n = checked_count(n)?;
    let mut pairs = Vec::new();
    for (line, body) in lines {
        let f: Vec<&str> = body.split_whitespace().collect();
        if f.len() != 2 {
            return Err(ParseError::Syntax {
                at: Location::Line { line, column: 1 },
                message: "expected `u v`".into(),
            });
        }
        let u = parse_int(f[0], line, column_of(body, f[0]))?;
        let v = parse_int(f[1], line, column_of(body, f[1]))?;
        pairs.push((Location::Line { line, column: 1 }, u, v));
    }
    let token_at = Location::Line {
        line: hline,
        column: column_of(header, fields[2]),
    };
    build(n, token, token_at, pairs.into_iter(), directed)
}

fn column_of(line: &str, field: &str) -> usize {
    field.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn parse_int(s: &str, line: usize, column: usize) -> Result<u64, ParseError> {
    s.parse().map_err(|_| ParseError::Syntax {
        at: Location::Line { line, column },
        message: format!("`{s}` is not a non-negative integer"),
    })
}

fn checked_count(n: u64) -> Result<usize, ParseError> {
    if n > MAX_VERTICES as u64 {
        Err(ParseError::TooLarge(n))
    } else {
        Ok(n as usize)
    }
}

fn build(
    n: usize,
    token: u64,
    token_at: Location,
    pairs: impl Iterator<Item = (Location, u64, u64)>,
    directed: bool,
) -> Result<ParsedPosition, ParseError> {
    let mut seen = BTreeSet::new();
    let mut checked = Vec::new();
    for (at, u, v) in pairs {
        for w in [u, v] {
            if w >= n as u64 {
                return Err(ParseError::OutOfRange {
                    vertex: w,
                    vertex_count: n,
                    at,
                });
            }
        }
        let (u, v) = (u as usize, v as usize);
        if u == v {
            return Err(ParseError::SelfLoop { vertex: u, at });
        }
        let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            return Err(ParseError::DuplicateEdge {
                u: key.0,
                v: key.1,
                at,
            });
        }
        checked.push((u, v));
    }
    if token >= n as u64 {
        return Err(ParseError::OutOfRange {
            vertex: token,
            vertex_count: n,
            at: token_at,
        });
    }
    let token = token as usize;
    let unexpected = |e: GraphError| -> ParseError {
        // every condition GraphError can report was checked above
        unreachable!("validated input rejected: {e}")
    };
    Ok(if directed {
        let g = DirectedGraph::from_arcs(n, checked).map_err(unexpected)?;
        ParsedPosition::Directed(DirectedPosition::new(g, token).map_err(unexpected)?)
    } else {
        let g = Graph::from_edges(n, checked).map_err(unexpected)?;
        ParsedPosition::Undirected(Position::new(g, token).map_err(unexpected)?)
    })
}

/// Canonical JSON for an undirected position.
pub fn serialize_position(p: &Position) -> String {
    canonical_json(
        p.vertex_count(),
        "edges",
        p.graph().edges(),
        p.token(),
    )
}

/// Canonical JSON for a directed position.
pub fn serialize_directed(p: &DirectedPosition) -> String {
    canonical_json(p.graph().vertex_count(), "arcs", p.graph().arcs(), p.token())
}

pub fn serialize_graph(p: &ParsedPosition) -> String {
    match p {
        ParsedPosition::Undirected(p) => serialize_position(p),
        ParsedPosition::Directed(p) => serialize_directed(p),
    }
}

fn canonical_json(
    n: usize,
    key: &str,
    pairs: impl Iterator<Item = (usize, usize)>,
    token: usize,
) -> String {
    let mut s = format!("{{\"vertices\":{n},\"{key}\":[");
    for (i, (u, v)) in pairs.enumerate() {
        if i > 0 {
            s.push(',');
        }
        write!(s, "[{u},{v}]").unwrap();
    }
    write!(s, "],\"token\":{token}}}").unwrap();
    s
}

pub fn serialize_edgelist(p: &ParsedPosition) -> String {
    let (tag, n, token, pairs): (&str, usize, usize, Vec<(usize, usize)>) = match p {
        ParsedPosition::Undirected(p) => ("ug", p.vertex_count(), p.token(), p.graph().edges().collect()),
        ParsedPosition::Directed(p) => (
            "gg",
            p.graph().vertex_count(),
            p.token(),
            p.graph().arcs().collect(),
        ),
    };
    let mut s = format!("{tag} {n} {token}\n");
    for (u, v) in pairs {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
