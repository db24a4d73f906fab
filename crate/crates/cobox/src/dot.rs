use std::collections::BTreeMap;
use std::fmt::Write as _;

use cobox_core::blocks::{block_decomposition, BlockDecomposition};
use cobox_core::{Cover, Edge, Graph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DotError {
    #[error("block decomposition does not belong to this graph")]
    MismatchedDecomposition,
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Graphviz text with two clusters: the graph itself, with edges grouped and
/// coloured by the first cover element containing them, and its block-cut
/// tree (`B<i>` for blocks, `c<v>` for cut-vertices).
pub fn export_dot(
    g: &Graph,
    bd: &BlockDecomposition,
    cover: Option<&Cover>,
) -> Result<String, DotError> {
    if block_decomposition(g) != *bd {
        return Err(DotError::MismatchedDecomposition);
    }
    let mut groups: BTreeMap<Option<usize>, Vec<Edge>> = BTreeMap::new();
    let owner: BTreeMap<Edge, usize> = cover
        .map(|c| {
            let mut m = BTreeMap::new();
            for (i, el) in c.elements.iter().enumerate() {
                for &e in &el.subgraph.edges {
                    m.entry(e).or_insert(i);
                }
            }
            m
        })
        .unwrap_or_default();
    for e in g.edges() {
        groups.entry(owner.get(&e).copied()).or_default().push(e);
    }

    let mut out = String::from("graph cobox {\n  subgraph cluster_graph {\n    label=\"graph\";\n");
    for v in g.vertices() {
        let _ = writeln!(out, "    v{v} [label=\"{v}\"];");
    }
    for (group, edges) in &groups {
        match group {
            Some(i) => {
                let _ = writeln!(
                    out,
                    "    subgraph element_{i} {{\n      edge [color=\"{}\"];",
                    PALETTE[i % PALETTE.len()]
                );
                for (a, b) in edges {
                    let _ = writeln!(out, "      v{a} -- v{b};");
                }
                out.push_str("    }\n");
            }
            None => {
                for (a, b) in edges {
                    let _ = writeln!(out, "    v{a} -- v{b};");
                }
            }
        }
    }
    out.push_str("  }\n  subgraph cluster_block_cut_tree {\n    label=\"block-cut tree\";\n");
    for (i, b) in bd.blocks().iter().enumerate() {
        let members: Vec<String> = b.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(
            out,
            "    B{i} [shape=box, label=\"B{i}: {}\"];",
            members.join(",")
        );
    }
    for c in bd.cut_vertices() {
        let _ = writeln!(out, "    c{c} [shape=circle, label=\"{c}\"];");
    }
    for (i, c) in bd.tree_edges() {
        let _ = writeln!(out, "    B{i} -- c{c};");
    }
    out.push_str("  }\n}\n");
    Ok(out)
}
