//! Co-interval and threshold subgraphs.
//!
//! A graph is co-interval when its vertices map to closed intervals with
//! adjacency exactly when the intervals are disjoint. Equivalently, some
//! vertex ordering puts every vertex's earlier neighbours in a prefix of the
//! ordering; [`satisfies_prefix_property`] checks that condition verbatim.

mod ant;
mod recognition;
mod threshold;

pub use ant::{big_ant, maximal_cointerval_subgraphs, maximal_threshold_subgraphs, BigAnt};
pub use recognition::{cointerval_representation, is_cointerval, Interval, IntervalRepresentation};
pub use threshold::is_threshold;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{edge, EdgeSubgraph, Graph, Vertex};

/// A permutation of a vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder(Vec<Vertex>);

impl VertexOrder {
    pub fn new(sequence: Vec<Vertex>) -> Self {
        VertexOrder(sequence)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th vertex, counting from 1.
    pub fn at(&self, i: usize) -> Vertex {
        self.0[i - 1]
    }

    /// True when this is a permutation of exactly the vertices of `g`.
    pub fn is_permutation_of(&self, g: &Graph) -> bool {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1]) && sorted.iter().copied().eq(g.vertices())
    }

    /// The subsequence of vertices in `keep`.
    pub fn restricted_to(&self, keep: &[Vertex]) -> VertexOrder {
        VertexOrder(
            self.0
                .iter()
                .copied()
                .filter(|v| keep.binary_search(v).is_ok())
                .collect(),
        )
    }
}

/// The subgraph grown from `sigma` by intersecting neighbourhoods in order:
/// the first vertex keeps its whole neighbourhood, each later vertex keeps
/// what survives intersection with its own, and contributes edges to it.
pub fn sigma_subgraph(g: &Graph, sigma: &VertexOrder) -> Result<EdgeSubgraph> {
    if !sigma.is_permutation_of(g) {
        return Err(Error::NotPermutation);
    }
    let mut edges = Vec::new();
    let mut live: Vec<Vertex> = Vec::new();
    for (i, &x) in sigma.as_slice().iter().enumerate() {
        if i == 0 {
            live = g.neighbors(x).to_vec();
        } else {
            live.retain(|&y| g.has_edge(x, y));
        }
        if live.is_empty() {
            break;
        }
        edges.extend(live.iter().map(|&y| edge(x, y)));
    }
    Ok(EdgeSubgraph::from_edges(edges))
}

/// Checks, for every `i < j < k`, that an edge between the `j`-th and `k`-th
/// vertices implies an edge between the `i`-th and `k`-th.
pub fn satisfies_prefix_property(h: &Graph, order: &VertexOrder) -> bool {
    let s = order.as_slice();
    let n = s.len();
    for k in 0..n {
        for j in 0..k {
            if !h.has_edge(s[j], s[k]) {
                continue;
            }
            if (0..j).any(|i| !h.has_edge(s[i], s[k])) {
                return false;
            }
        }
    }
    true
}

/// Edge sets that are maximal under strict inclusion, deduplicated; the
/// first occurrence of each surviving set is kept, in input order.
pub(crate) fn maximal_by_inclusion<T: Clone>(
    items: &[(BTreeSet<(Vertex, Vertex)>, T)],
) -> Vec<usize> {
    let mut keep = Vec::new();
    'outer: for (i, (a, _)) in items.iter().enumerate() {
        for (j, (b, _)) in items.iter().enumerate() {
            let dominated = if a == b {
                j < i
            } else {
                a.len() < b.len() && a.is_subset(b)
            };
            if dominated {
                continue 'outer;
            }
        }
        keep.push(i);
    }
    keep
}
