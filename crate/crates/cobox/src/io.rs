//! Graph text formats.
//!
//! The edge list is `n m` on the first line followed by `m` lines `u v`
//! with `u < v`, sorted. The structured form is JSON `{"n": .., "edges": [[u, v], ..]}`.

use std::fmt::Write as _;

use cobox_core::cointerval::IntervalRepresentation;
use cobox_core::{build_graph, Graph, Vertex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] cobox_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Edgelist,
    Structured,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

/// Parses either format; `None` picks structured when the text starts with `{`.
pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph, ParseError> {
    let format = format.unwrap_or(if text.trim_start().starts_with('{') {
        GraphFormat::Structured
    } else {
        GraphFormat::Edgelist
    });
    match format {
        GraphFormat::Edgelist => parse_edgelist(text),
        GraphFormat::Structured => parse_structured(text),
    }
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(ParseError::Syntax {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let [n, m] = numbers::<2>(line, header)?;
    let mut edges = Vec::with_capacity(m as usize);
    for (line, l) in lines {
        let [u, v] = numbers::<2>(line, l)?;
        edges.push((u as Vertex, v as Vertex));
    }
    if edges.len() != m as usize {
        return Err(ParseError::Syntax {
            line: 1,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Ok(build_graph(n as usize, &edges)?)
}

fn numbers<const K: usize>(line: usize, l: &str) -> Result<[u64; K], ParseError> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    if fields.len() != K {
        return Err(ParseError::Syntax {
            line,
            msg: format!("expected {K} integers, got `{l}`"),
        });
    }
    let mut out = [0u64; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| ParseError::Syntax {
            line,
            msg: format!("`{f}` is not a non-negative integer"),
        })?;
        if *slot > u32::MAX as u64 {
            return Err(ParseError::Syntax {
                line,
                msg: format!("`{f}` is too large"),
            });
        }
    }
    Ok(out)
}

pub fn parse_structured(text: &str) -> Result<Graph, ParseError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let edges: Vec<(Vertex, Vertex)> = doc.edges.iter().map(|&[a, b]| (a, b)).collect();
    Ok(build_graph(doc.n, &edges)?)
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edgelist => write_edgelist(g),
        GraphFormat::Structured => write_structured(g),
    }
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.id_bound(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_structured(g: &Graph) -> String {
    let doc = GraphDoc {
        n: g.id_bound(),
        edges: g.edges().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_string(&doc).expect("graph documents always serialize") + "\n"
}

/// One `v lo hi` line per vertex, sorted by vertex.
pub fn write_intervals(rep: &IntervalRepresentation) -> String {
    let mut out = String::new();
    for (v, i) in &rep.intervals {
        let _ = writeln!(out, "{v} {} {}", i.lo, i.hi);
    }
    out
}
