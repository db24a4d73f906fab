use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::maximal_by_inclusion;
use super::recognition::{Interval, IntervalRepresentation};
use crate::blocks::{block_decomposition, is_block_graph};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, EdgeSubgraph, Graph, Vertex};

/// A clique `block` together with two apex vertices in it. The subgraph it
/// denotes has the edges of the clique plus every edge at either apex.
/// `u == v` is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BigAnt {
    /// Sorted clique members.
    pub block: Vec<Vertex>,
    pub u: Vertex,
    pub v: Vertex,
}

impl BigAnt {
    pub fn new(g: &Graph, block: &[Vertex], u: Vertex, v: Vertex) -> Result<Self> {
        let mut block = block.to_vec();
        block.sort_unstable();
        block.dedup();
        if block.is_empty() || !g.is_clique(&block) {
            return Err(Error::NotClique);
        }
        for apex in [u, v] {
            if block.binary_search(&apex).is_err() {
                return Err(Error::ApexOutsideBlock(apex));
            }
        }
        Ok(BigAnt { block, u, v })
    }

    pub fn edges(&self, g: &Graph) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        for (i, &a) in self.block.iter().enumerate() {
            for &b in &self.block[i + 1..] {
                out.insert(edge(a, b));
            }
        }
        for apex in [self.u, self.v] {
            out.extend(g.neighbors(apex).iter().map(|&w| edge(apex, w)));
        }
        out
    }

    /// The subgraph in `g`: clique members plus the apexes' neighbourhoods.
    pub fn subgraph(&self, g: &Graph) -> EdgeSubgraph {
        let mut vertices: Vec<Vertex> = self.block.clone();
        vertices.extend_from_slice(g.neighbors(self.u));
        vertices.extend_from_slice(g.neighbors(self.v));
        vertices.sort_unstable();
        vertices.dedup();
        EdgeSubgraph {
            vertices,
            edges: self.edges(g).into_iter().collect(),
        }
    }

    /// Explicit co-interval model: the clique gets pairwise disjoint
    /// intervals with `u` leftmost and `v` rightmost; an outside neighbour of
    /// `u` starts after `u`'s interval and runs to the right end, an outside
    /// neighbour of `v` ends before `v`'s interval.
    pub fn representation(&self, g: &Graph) -> IntervalRepresentation {
        let mut order: Vec<Vertex> = Vec::with_capacity(self.block.len());
        order.push(self.u);
        order.extend(
            self.block
                .iter()
                .copied()
                .filter(|&t| t != self.u && t != self.v),
        );
        if self.v != self.u {
            order.push(self.v);
        }
        let k = order.len() as u32;
        let right_end = 3 * k;
        let last_start = 3 * (k - 1);

        let mut rep = IntervalRepresentation::default();
        for (p, &t) in order.iter().enumerate() {
            let p = p as u32;
            rep.intervals.insert(t, Interval::new(3 * p, 3 * p + 1));
        }
        let in_block = |w: &Vertex| self.block.binary_search(w).is_ok();
        let near_u: BTreeSet<Vertex> = g
            .neighbors(self.u)
            .iter()
            .copied()
            .filter(|w| !in_block(w))
            .collect();
        let near_v: BTreeSet<Vertex> = g
            .neighbors(self.v)
            .iter()
            .copied()
            .filter(|w| !in_block(w))
            .collect();
        for &w in near_u.union(&near_v) {
            let lo = if near_u.contains(&w) { 2 } else { 0 };
            let hi = if near_v.contains(&w) && self.v != self.u {
                last_start - 1
            } else {
                right_end
            };
            rep.intervals.insert(w, Interval::new(lo, hi));
        }
        rep
    }
}

/// `(block, u, v)` for the given block, `u <= v`, in lexicographic order.
fn apex_pairs(
    block: &[Vertex],
    same_apex_only: bool,
) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    block.iter().enumerate().flat_map(move |(i, &u)| {
        let rest = if same_apex_only {
            &block[i..=i]
        } else {
            &block[i..]
        };
        rest.iter().map(move |&v| (u, v))
    })
}

fn maximal_ants(g: &Graph, same_apex_only: bool) -> Result<Vec<BigAnt>> {
    if !is_block_graph(g) {
        return Err(Error::NotBlockGraph);
    }
    let bd = block_decomposition(g);
    let mut candidates: Vec<(BTreeSet<Edge>, BigAnt)> = Vec::new();
    for block in bd.blocks().iter().filter(|b| b.len() >= 2) {
        for (u, v) in apex_pairs(block, same_apex_only) {
            let ant = BigAnt {
                block: block.clone(),
                u,
                v,
            };
            candidates.push((ant.edges(g), ant));
        }
    }
    // blocks are in min-vertex order, so the first copy of an edge set is
    // the least (block, u, v) triple
    Ok(maximal_by_inclusion(&candidates)
        .into_iter()
        .map(|i| candidates[i].1.clone())
        .collect())
}

/// Every maximal co-interval subgraph of a block graph, each once.
pub fn maximal_cointerval_subgraphs(g: &Graph) -> Result<Vec<BigAnt>> {
    maximal_ants(g, false)
}

/// Every maximal threshold subgraph of a block graph, each once.
pub fn maximal_threshold_subgraphs(g: &Graph) -> Result<Vec<BigAnt>> {
    maximal_ants(g, true)
}

pub fn big_ant(g: &Graph, q: &[Vertex], u: Vertex, v: Vertex) -> Result<EdgeSubgraph> {
    Ok(BigAnt::new(g, q, u, v)?.subgraph(g))
}
