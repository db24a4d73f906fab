//! Graph generators for tests, benchmarks and the `gen` command.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct BlockGraphParams {
    pub vertices: usize,
    /// Probability that a new block is a single edge.
    pub edge_block_prob: f64,
    /// Size range for the other blocks, inclusive.
    pub min_clique: usize,
    pub max_clique: usize,
    /// Relabel vertices by a random permutation, so that ids carry no
    /// information about the growth order.
    pub shuffle: bool,
}

impl Default for BlockGraphParams {
    fn default() -> Self {
        BlockGraphParams {
            vertices: 50,
            edge_block_prob: 0.6,
            min_clique: 3,
            max_clique: 5,
            shuffle: false,
        }
    }
}

impl BlockGraphParams {
    pub fn with_vertices(vertices: usize) -> Self {
        BlockGraphParams {
            vertices,
            ..Default::default()
        }
    }
}

/// A connected block graph on exactly `params.vertices` vertices, grown as a
/// random tree of cliques: each new block hangs off a uniformly random
/// existing vertex. The last block is truncated to fit the vertex budget.
pub fn random_block_graph<R: Rng + ?Sized>(rng: &mut R, params: &BlockGraphParams) -> Graph {
    let n = params.vertices;
    let mut edges = Vec::new();
    let mut count = n.min(1);
    while count < n {
        let want = if rng.random_bool(params.edge_block_prob) {
            2
        } else {
            rng.random_range(
                params.min_clique.max(2)..=params.max_clique.max(params.min_clique).max(2),
            )
        };
        let size = want.min(n - count + 1);
        let hook = rng.random_range(0..count) as Vertex;
        let mut block = vec![hook];
        block.extend((count..count + size - 1).map(|v| v as Vertex));
        for (i, &a) in block.iter().enumerate() {
            edges.extend(block[i + 1..].iter().map(|&b| (a, b)));
        }
        count += size - 1;
    }
    if params.shuffle {
        let mut labels: Vec<Vertex> = (0..n as Vertex).collect();
        labels.shuffle(rng);
        for e in &mut edges {
            *e = (labels[e.0 as usize], labels[e.1 as usize]);
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are in range and loop-free")
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n as Vertex {
        for b in a + 1..n as Vertex {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are in range and loop-free")
}

/// A uniformly random permutation of the vertices of `g`.
pub fn random_ordering<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> Vec<Vertex> {
    let mut vs: Vec<Vertex> = g.vertices().collect();
    vs.shuffle(rng);
    vs
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as Vertex).map(|i| (i - 1, i))).expect("path edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let n32 = n as Vertex;
    Graph::from_edges(n, (0..n32).flat_map(|a| (a + 1..n32).map(move |b| (a, b))))
        .expect("clique edges are valid")
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// labelled `0..n`, in a fixed order.
///
/// Built by attaching a leaf to every vertex of every tree on `n - 1`
/// vertices and keeping one tree per canonical form.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for tree in &level {
            for at in 0..size - 1 {
                let mut adj = tree.clone();
                adj.push(vec![at]);
                adj[at].push(size - 1);
                if seen.insert(canonical_tree(&adj)) {
                    next.push(adj);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|adj| {
            let edges = adj.iter().enumerate().flat_map(|(a, ns)| {
                ns.iter()
                    .filter(move |&&b| a < b)
                    .map(move |&b| (a as Vertex, b as Vertex))
            });
            Graph::from_edges(n, edges).expect("tree edges are valid")
        })
        .collect()
}

/// Centre-rooted AHU encoding; equal exactly for isomorphic trees.
fn canonical_tree(adj: &[Vec<usize>]) -> Vec<u8> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    children.sort();
    let mut code = vec![b'('];
    for c in children {
        code.extend(c);
    }
    code.push(b')');
    code
}
