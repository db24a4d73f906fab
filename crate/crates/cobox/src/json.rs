//! JSON documents for covers, traces and box representations.

use std::collections::BTreeMap;

use cobox_core::cointerval::BigAnt;
use cobox_core::cover::{BoxRepresentation, CoverElement, IterationTrace, VerificationReport};
use cobox_core::{Cover, CoverKind, EdgeSubgraph, Vertex};
use serde::{Deserialize, Serialize};

use crate::io::ParseError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverDoc {
    pub kind: String,
    pub size: usize,
    pub elements: Vec<ElementDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub traces: Vec<TraceDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vertex>,
    #[serde(default)]
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub case: String,
    pub component: Option<Vec<Vertex>>,
    pub block: Vec<Vertex>,
    pub protected: Option<Vertex>,
    pub apexes: Option<[Vertex; 2]>,
    pub cut_vertices: Vec<Vertex>,
    pub removed: Vec<Vertex>,
    pub element: usize,
}

impl From<&IterationTrace> for TraceDoc {
    fn from(t: &IterationTrace) -> Self {
        TraceDoc {
            case: t.step.label().to_string(),
            component: t.component.clone(),
            block: t.block.clone(),
            protected: t.protected,
            apexes: t.apexes.map(|(u, v)| [u, v]),
            cut_vertices: t.block_cut_vertices.clone(),
            removed: t.removed.clone(),
            element: t.element,
        }
    }
}

pub fn cover_doc(cover: &Cover, traces: &[IterationTrace]) -> CoverDoc {
    CoverDoc {
        kind: cover.kind.as_str().to_string(),
        size: cover.len(),
        elements: cover
            .elements
            .iter()
            .map(|el| ElementDoc {
                block: el.ant.as_ref().map(|a| a.block.clone()),
                u: el.ant.as_ref().map(|a| a.u),
                v: el.ant.as_ref().map(|a| a.v),
                vertices: el.subgraph.vertices.clone(),
                edges: el.subgraph.edges.iter().map(|&(a, b)| [a, b]).collect(),
            })
            .collect(),
        traces: traces.iter().map(TraceDoc::from).collect(),
    }
}

pub fn parse_cover(text: &str) -> Result<Cover, ParseError> {
    let doc: CoverDoc = serde_json::from_str(text)?;
    let kind = CoverKind::parse(&doc.kind).ok_or_else(|| ParseError::Syntax {
        line: 1,
        msg: format!("unknown cover kind `{}`", doc.kind),
    })?;
    let elements = doc
        .elements
        .into_iter()
        .map(|el| {
            let mut subgraph = EdgeSubgraph::from_edges(el.edges.iter().map(|&[a, b]| (a, b)));
            // explicitly listed vertices may include isolated ones
            subgraph.vertices.extend(el.vertices);
            subgraph.vertices.sort_unstable();
            subgraph.vertices.dedup();
            let ant = match (el.block, el.u, el.v) {
                (Some(mut block), Some(u), Some(v)) => {
                    block.sort_unstable();
                    block.dedup();
                    Some(BigAnt { block, u, v })
                }
                _ => None,
            };
            CoverElement { ant, subgraph }
        })
        .collect();
    Ok(Cover { kind, elements })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxDoc {
    pub d: usize,
    pub boxes: BTreeMap<String, Vec<[u32; 2]>>,
}

pub fn box_doc(rep: &BoxRepresentation) -> BoxDoc {
    BoxDoc {
        d: rep.dimension,
        boxes: rep
            .boxes
            .iter()
            .map(|(v, b)| (v.to_string(), b.iter().map(|i| [i.lo, i.hi]).collect()))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDoc {
    pub valid: bool,
    pub not_subgraph: Vec<usize>,
    pub failed_recognition: Vec<usize>,
    pub uncovered: Vec<[Vertex; 2]>,
}

impl From<&VerificationReport> for ReportDoc {
    fn from(r: &VerificationReport) -> Self {
        ReportDoc {
            valid: r.is_valid(),
            not_subgraph: r.not_subgraph.clone(),
            failed_recognition: r.failed_recognition.clone(),
            uncovered: r.uncovered.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}
