#![allow(dead_code)]

use std::collections::BTreeSet;

use cobox_core::blocks::{block_decomposition, classify_blocks, find_near_leaf_block, BlockKind};
use cobox_core::cointerval::big_ant;
use cobox_core::cover::{Cover, CoverKind, IterationTrace, Step};
use cobox_core::graph::{Edge, Graph, Shape, Vertex, VertexSet};

/// Straight transcription of the covering loop on explicit graphs: take the
/// component holding the smallest vertex that still has an edge, recompute
/// its blocks from scratch, and apply the first case that fits. Slow but
/// independent of the incremental engine.
pub fn reference_cover(g: &Graph, kind: CoverKind) -> Vec<BTreeSet<Edge>> {
    let mut gamma = g.clone();
    let mut out = Vec::new();
    while gamma.edge_count() > 0 {
        let comp = gamma
            .connected_components()
            .into_iter()
            .find(|c| c.len() >= 2)
            .unwrap();
        let h = gamma.induced(&comp);
        let (element, removed): (BTreeSet<Edge>, VertexSet) = match h.shape().unwrap() {
            Shape::Clique | Shape::Star => (h.edges().collect(), comp.clone()),
            Shape::Neither => step_on(&h, kind),
        };
        assert!(!removed.is_empty());
        out.push(element);
        gamma = gamma.remove_vertices(&removed).unwrap();
    }
    out
}

fn ant_edges(h: &Graph, q: &[Vertex], u: Vertex, v: Vertex) -> BTreeSet<Edge> {
    big_ant(h, q, u, v).unwrap().edges.into_iter().collect()
}

fn ant_vertices(h: &Graph, q: &[Vertex], u: Vertex, v: Vertex) -> VertexSet {
    big_ant(h, q, u, v).unwrap().vertices.into_iter().collect()
}

fn leaves_at(h: &Graph, x: Vertex) -> VertexSet {
    h.neighbors(x)
        .iter()
        .copied()
        .filter(|&y| h.degree(y) == 1)
        .collect()
}

fn step_on(h: &Graph, kind: CoverKind) -> (BTreeSet<Edge>, VertexSet) {
    let bd = block_decomposition(h);
    let classes = classify_blocks(&bd);
    let big_leaf = bd
        .blocks()
        .iter()
        .zip(&classes)
        .find(|(b, c)| c.kind == BlockKind::Leaf && b.len() >= 3);
    if let Some((q, c)) = big_leaf {
        let v = c.cut_vertices[0];
        return (ant_edges(h, q, v, v), q.iter().copied().collect());
    }
    let nl = find_near_leaf_block(h).unwrap();
    let q = &nl.block;
    let cuts = bd.cut_vertices_of(nl.block_index).to_vec();
    let v = nl.anchor.unwrap_or(cuts[0]);
    let others: Vec<Vertex> = cuts.iter().copied().filter(|&x| x != v).collect();
    let u = others[0];
    match kind {
        CoverKind::Threshold => {
            let removed = if cuts.len() == 2 {
                let mut s = ant_vertices(h, q, u, u);
                s.remove(&v);
                s
            } else {
                let mut s = leaves_at(h, u);
                s.insert(u);
                s
            };
            (ant_edges(h, q, u, u), removed)
        }
        CoverKind::Cointerval if cuts.len() == 2 => {
            (ant_edges(h, q, u, v), ant_vertices(h, q, u, u))
        }
        CoverKind::Cointerval => {
            let w = others[1];
            let removed = if cuts.len() == 3 {
                let mut s = ant_vertices(h, q, u, w);
                s.remove(&v);
                s
            } else {
                let mut s = leaves_at(h, u);
                s.extend(leaves_at(h, w));
                s.insert(u);
                s.insert(w);
                s
            };
            (ant_edges(h, q, u, w), removed)
        }
    }
}

/// Replays a run of the covering engine on explicit residual graphs and
/// checks every recorded iteration against its definition. Returns a
/// description of the first problem found.
pub fn replay(g: &Graph, cover: &Cover, traces: &[IterationTrace]) -> Result<(), String> {
    if cover.elements.len() != traces.len() {
        return Err("one trace per element expected".into());
    }
    let mut gamma = g.clone();
    for (i, t) in traces.iter().enumerate() {
        if t.element != i {
            return Err(format!("trace {i} points at element {}", t.element));
        }
        let el = &cover.elements[i];
        let removed: VertexSet = t.removed.iter().copied().collect();
        if removed.is_empty() {
            return Err(format!("iteration {i} removed nothing"));
        }
        if let Some(component) = &t.component {
            let root = component[0];
            let actual = gamma.component_of(root);
            if &actual != component {
                return Err(format!(
                    "iteration {i}: recorded component is not a residual component"
                ));
            }
            if !removed.iter().all(|r| component.binary_search(r).is_ok()) {
                return Err(format!(
                    "iteration {i}: removed vertices leave the component"
                ));
            }
        }
        let ant = el.ant.as_ref().ok_or(format!("element {i} has no ant"))?;
        let expected =
            big_ant(&gamma, &ant.block, ant.u, ant.v).map_err(|e| format!("iteration {i}: {e}"))?;
        if expected != el.subgraph {
            return Err(format!(
                "iteration {i}: element is not the big ant of the residual graph"
            ));
        }
        if t.apexes != Some((ant.u, ant.v)) {
            return Err(format!("iteration {i}: apexes differ from the element"));
        }
        if cover.kind == CoverKind::Threshold && ant.u != ant.v {
            return Err(format!("iteration {i}: threshold element with two apexes"));
        }
        let edges = el.subgraph.edge_set();
        for &r in &removed {
            for &y in gamma.neighbors(r) {
                let e = if r < y { (r, y) } else { (y, r) };
                if !edges.contains(&e) {
                    return Err(format!(
                        "iteration {i}: residual edge {e:?} at removed vertex {r} is not covered"
                    ));
                }
            }
        }
        check_removal_formula(&gamma, t, &removed).map_err(|m| format!("iteration {i}: {m}"))?;
        let before = gamma.edge_count();
        gamma = gamma
            .remove_vertices(&removed)
            .map_err(|e| format!("iteration {i}: {e}"))?;
        if gamma.edge_count() >= before {
            return Err(format!("iteration {i} removed no edge"));
        }
    }
    if gamma.edge_count() != 0 {
        return Err("edges left after the last iteration".into());
    }
    Ok(())
}

fn check_removal_formula(
    gamma: &Graph,
    t: &IterationTrace,
    removed: &VertexSet,
) -> Result<(), String> {
    let q = &t.block;
    let cuts = &t.block_cut_vertices;
    let verts = |u: Vertex, v: Vertex| ant_vertices(gamma, q, u, v);
    let expected: VertexSet = match t.step {
        Step::CliqueOrStar => gamma
            .component_of(removed.iter().next().copied().unwrap())
            .into_iter()
            .collect(),
        Step::LargeLeafBlock => q.iter().copied().collect(),
        Step::NearLeafTwoCuts => {
            let (u, _) = t.apexes.unwrap();
            verts(u, u)
        }
        Step::NearLeafManyCuts => {
            let (u, w) = t.apexes.unwrap();
            let v = t.protected.unwrap();
            if cuts.len() == 3 {
                let mut s = verts(u, w);
                s.remove(&v);
                s
            } else {
                let mut s = leaves_at(gamma, u);
                s.extend(leaves_at(gamma, w));
                s.extend([u, w]);
                s
            }
        }
        Step::ThresholdNearLeafTwoCuts => {
            let (u, _) = t.apexes.unwrap();
            let mut s = verts(u, u);
            s.remove(&t.protected.unwrap());
            s
        }
        Step::ThresholdNearLeafManyCuts => {
            let (u, _) = t.apexes.unwrap();
            let mut s = leaves_at(gamma, u);
            s.insert(u);
            s
        }
    };
    if &expected != removed {
        return Err(format!(
            "step {} removed {removed:?}, formula gives {expected:?}",
            t.step
        ));
    }
    if !cuts.is_empty() {
        let bd = block_decomposition(gamma);
        let actual: Vec<Vertex> = q
            .iter()
            .copied()
            .filter(|x| bd.cut_vertices().contains(x))
            .collect();
        if &actual != cuts {
            return Err(format!(
                "recorded cut-vertices {cuts:?}, residual graph has {actual:?}"
            ));
        }
        if let Some(v) = t.protected {
            if !cuts.contains(&v) {
                return Err(format!(
                    "protected vertex {v} is not a cut-vertex of the block"
                ));
            }
        }
    }
    let step_cuts_ok = match t.step {
        Step::NearLeafTwoCuts | Step::ThresholdNearLeafTwoCuts => cuts.len() == 2,
        Step::NearLeafManyCuts | Step::ThresholdNearLeafManyCuts => cuts.len() >= 3,
        _ => true,
    };
    if !step_cuts_ok {
        return Err(format!(
            "step {} taken with {} cut-vertices",
            t.step,
            cuts.len()
        ));
    }
    Ok(())
}
