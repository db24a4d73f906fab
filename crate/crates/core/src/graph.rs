//! Simple undirected graphs with stable vertex ids.
//!
//! Vertex ids are `u32` values below [`Graph::id_bound`]. Deleting vertices
//! never renumbers the survivors, so anything computed on a residual graph
//! can be reported in the labels of the original input.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Unordered pair stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

pub type VertexSet = BTreeSet<Vertex>;

/// Normalizes an unordered pair.
#[inline]
pub fn edge(a: Vertex, b: Vertex) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Clique,
    Star,
    Neither,
}

#[derive(Debug, Clone, Default)]
pub struct Graph {
    present: Vec<bool>,
    adj: Vec<Vec<Vertex>>,
    vertex_count: usize,
    edge_count: usize,
}

/// Builds the graph on `0..n` with the given edges. Duplicate edges collapse.
pub fn build_graph(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
    Graph::from_edges(n, edges.iter().copied())
}

impl Graph {
    /// Edgeless graph on `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        Graph {
            present: vec![true; n],
            adj: vec![Vec::new(); n],
            vertex_count: n,
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut g = Graph::with_vertices(n);
        for (a, b) in edges {
            for x in [a, b] {
                if x as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            g.adj[a as usize].push(b);
            g.adj[b as usize].push(a);
        }
        g.normalize();
        Ok(g)
    }

    /// Graph on an arbitrary set of vertex ids. Edge endpoints must be listed
    /// in `vertices`.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let vertices: Vec<Vertex> = vertices.into_iter().collect();
        let bound = vertices.iter().map(|&v| v as usize + 1).max().unwrap_or(0);
        let mut g = Graph {
            present: vec![false; bound],
            adj: vec![Vec::new(); bound],
            vertex_count: 0,
            edge_count: 0,
        };
        for v in vertices {
            if !g.present[v as usize] {
                g.present[v as usize] = true;
                g.vertex_count += 1;
            }
        }
        for (a, b) in edges {
            if a == b {
                return Err(Error::Loop(a));
            }
            for x in [a, b] {
                if !g.contains(x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
            g.adj[a as usize].push(b);
            g.adj[b as usize].push(a);
        }
        g.normalize();
        Ok(g)
    }

    fn normalize(&mut self) {
        let mut twice = 0;
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        self.edge_count = twice / 2;
    }

    /// One past the largest id this graph may contain.
    pub fn id_bound(&self) -> usize {
        self.present.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.present.get(v as usize).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(v, _)| v as Vertex)
    }

    /// Sorted neighbour list; empty for ids not in the graph.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.adj.get(v as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_clique(&self, vs: &[Vertex]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| {
            self.contains(a) && vs[i + 1..].iter().all(|&b| a != b && self.has_edge(a, b))
        })
    }

    /// Vertices reachable from `start`, sorted.
    pub fn component_of(&self, start: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.id_bound()];
        let mut out = self.bfs(start, &mut seen);
        out.sort_unstable();
        out
    }

    fn bfs(&self, start: Vertex, seen: &mut [bool]) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen[start as usize] = true;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            out.push(x);
            for &y in self.neighbors(x) {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Connected components ordered by their minimum vertex id.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.id_bound()];
        let mut out = Vec::new();
        for v in self.vertices() {
            if !seen[v as usize] {
                out.push(self.bfs(v, &mut seen).into_iter().collect());
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(v) => self.component_of(v).len() == self.vertex_count,
        }
    }

    /// The induced subgraph on the vertices not in `s`. Ids are preserved.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph> {
        if let Some(&bad) = s.iter().find(|&&v| !self.contains(v)) {
            return Err(Error::UnknownVertex(bad));
        }
        let mut removed = vec![false; self.id_bound()];
        for &v in s {
            removed[v as usize] = true;
        }
        Ok(self.retain(|v| !removed[v as usize]))
    }

    /// The induced subgraph on `keep`; ids outside the graph are ignored.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        self.retain(|v| keep.contains(&v))
    }

    fn retain(&self, keep: impl Fn(Vertex) -> bool) -> Graph {
        let mut g = Graph {
            present: vec![false; self.id_bound()],
            adj: vec![Vec::new(); self.id_bound()],
            vertex_count: 0,
            edge_count: 0,
        };
        let mut twice = 0;
        for v in self.vertices().filter(|&v| keep(v)) {
            g.present[v as usize] = true;
            g.vertex_count += 1;
            let list: Vec<Vertex> = self
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| keep(w))
                .collect();
            twice += list.len();
            g.adj[v as usize] = list;
        }
        g.edge_count = twice / 2;
        g
    }

    /// Classifies a connected graph with at least one edge. A single vertex
    /// counts as a clique; clique is tested before star, so `K2` is a clique.
    pub fn shape(&self) -> Result<Shape> {
        if self.vertex_count == 0 || !self.is_connected() {
            return Err(Error::Precondition(
                "shape check needs a connected, non-empty graph",
            ));
        }
        let n = self.vertex_count;
        if self.edge_count == n * (n - 1) / 2 {
            return Ok(Shape::Clique);
        }
        // connected, so a center of degree n - 1 plus n - 1 edges is a star
        let has_center = self.vertices().any(|v| self.degree(v) == n - 1);
        if has_center && self.edge_count == n - 1 {
            Ok(Shape::Star)
        } else {
            Ok(Shape::Neither)
        }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.id_bound()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.id_bound() as Vertex;
        let vertices = self.vertices().chain(other.vertices().map(|v| v + shift));
        let edges = self
            .edges()
            .chain(other.edges().map(|(a, b)| (a + shift, b + shift)));
        Graph::from_parts(vertices, edges).expect("union of valid graphs is valid")
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edge_count == other.edge_count
            && self.vertices().eq(other.vertices())
            && self.edges().eq(other.edges())
    }
}

impl Eq for Graph {}

/// A subgraph given by its edge set, with the vertices it touches.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeSubgraph {
    /// Sorted, without duplicates.
    pub vertices: Vec<Vertex>,
    /// Sorted normalized edges, without duplicates.
    pub edges: Vec<Edge>,
}

impl EdgeSubgraph {
    /// Subgraph spanned by `edges`; its vertices are exactly their endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(a, b)| edge(a, b)).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        EdgeSubgraph { vertices, edges }
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges.iter().copied().collect()
    }

    /// The subgraph as a standalone graph, keeping host ids.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_parts(self.vertices.iter().copied(), self.edges.iter().copied())
    }

    /// The subgraph relabelled to `0..k` in vertex order. Cheaper than
    /// [`to_graph`](Self::to_graph) when host ids are large; fine for any
    /// label-independent test.
    pub fn to_compact_graph(&self) -> Result<Graph> {
        let local = |v: &Vertex| self.vertices.binary_search(v).map(|i| i as Vertex);
        let mut edges = Vec::with_capacity(self.edges.len());
        for (a, b) in &self.edges {
            match (local(a), local(b)) {
                (Ok(a), Ok(b)) => edges.push((a, b)),
                _ => {
                    return Err(Error::UnknownVertex(if local(a).is_err() {
                        *a
                    } else {
                        *b
                    }))
                }
            }
        }
        Graph::from_edges(self.vertices.len(), edges)
    }

    pub fn is_subgraph_of(&self, host: &Graph) -> bool {
        self.vertices.iter().all(|&v| host.contains(v))
            && self
                .edges
                .iter()
                .all(|&(a, b)| a != b && host.has_edge(a, b))
            && self.edges.iter().all(|(a, b)| {
                self.vertices.binary_search(a).is_ok() && self.vertices.binary_search(b).is_ok()
            })
    }
}
