//! Graph files.
//!
//! The line format is DIMACS-like: `c` lines are comments, one header
//! `p edge <n> <m>`, then exactly `m` lines `e <u> <v>`. Repeated edge lines
//! make parallel edges and `e u u` makes a loop. A JSON object
//! `{"n": .., "edges": [[u, v], ..]}` is accepted as well.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gallery;
use crate::multigraph::Multigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphSource {
    File,
    Gallery,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: String,
    pub multigraph: Multigraph,
    pub source: GraphSource,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token.parse().map_err(|_| parse_error(line, format!("{what} `{token}` is not a non-negative integer")))
}

/// Parses either format; input whose first non-blank character is `{` is read as JSON.
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_dimacs(text)
    }
}

pub fn parse_json(text: &str) -> Result<Multigraph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))?;
    let pairs: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    Multigraph::from_edge_list(doc.n, &pairs)
}

pub fn parse_dimacs(text: &str) -> Result<Multigraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(parse_error(line, "duplicate `p` header"));
                }
                if tokens.next() != Some("edge") {
                    return Err(parse_error(line, "header must read `p edge <n> <m>`"));
                }
                let n = parse_number(tokens.next(), line, "vertex count")?;
                let m = parse_number(tokens.next(), line, "edge count")?;
                if n == 0 {
                    return Err(parse_error(line, "vertex count must be positive"));
                }
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(parse_error(line, "edge line before the `p` header"));
                };
                let u = parse_number(tokens.next(), line, "endpoint")?;
                let v = parse_number(tokens.next(), line, "endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(parse_error(line, format!("endpoint {w} outside 1..={n}")));
                    }
                }
                pairs.push((u, v));
            }
            other => return Err(parse_error(line, format!("unknown line type `{other}`"))),
        }
        if tokens.next().is_some() {
            return Err(parse_error(line, "trailing tokens"));
        }
    }
    let (n, m, header_line) = header.ok_or_else(|| parse_error(last_line.max(1), "missing `p edge` header"))?;
    if pairs.len() != m {
        return Err(parse_error(
            header_line,
            format!("edge count mismatch: header declares {m}, found {}", pairs.len()),
        ));
    }
    Multigraph::from_edge_list(n, &pairs)
}

/// The line format, edges in label order.
pub fn serialize_dimacs(g: &Multigraph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn serialize_json(g: &Multigraph) -> String {
    let doc = JsonGraph { n: g.vertex_count(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() };
    serde_json::to_string(&doc).expect("graph serializes")
}

impl GraphDocument {
    pub fn from_gallery(name: &str) -> Result<Self> {
        Ok(GraphDocument { name: name.to_string(), multigraph: gallery::by_name(name)?, source: GraphSource::Gallery })
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Ok(GraphDocument {
            name: path.display().to_string(),
            multigraph: parse_graph(&text)?,
            source: GraphSource::File,
        })
    }
}
