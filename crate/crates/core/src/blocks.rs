//! Blocks, cut-vertices and the block-cut tree.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Shape, Vertex, VertexSet};

const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<Vertex>>,
    cut_vertices: VertexSet,
    block_cuts: Vec<Vec<Vertex>>,
    cut_blocks: BTreeMap<Vertex, Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Isolated,
    Leaf,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockClass {
    pub kind: BlockKind,
    pub is_edge_block: bool,
    pub cut_vertices: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearLeafResult {
    pub block_index: usize,
    pub block: Vec<Vertex>,
    /// The cut-vertex shared by all internal neighbours, when there are any.
    pub anchor: Option<Vertex>,
    pub non_anchor_cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    /// Blocks as sorted vertex lists, ordered by minimum vertex id (ties by
    /// the rest of the list). Isolated vertices are singleton blocks.
    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn cut_vertices(&self) -> &VertexSet {
        &self.cut_vertices
    }

    /// Cut-vertices contained in block `i`, sorted.
    pub fn cut_vertices_of(&self, i: usize) -> &[Vertex] {
        &self.block_cuts[i]
    }

    /// Block indices containing cut-vertex `c`, sorted.
    pub fn blocks_at(&self, c: Vertex) -> &[usize] {
        self.cut_blocks.get(&c).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Block-cut tree adjacency: `(block, cut-vertex)` incidences in order.
    pub fn tree_edges(&self) -> impl Iterator<Item = (usize, Vertex)> + '_ {
        self.block_cuts
            .iter()
            .enumerate()
            .flat_map(|(i, cs)| cs.iter().map(move |&c| (i, c)))
    }

    /// Blocks sharing a cut-vertex with block `i`, as `(cut-vertex, block)`.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.block_cuts[i].iter().flat_map(move |&c| {
            self.blocks_at(c)
                .iter()
                .copied()
                .filter(move |&j| j != i)
                .map(move |j| (c, j))
        })
    }
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let bound = g.id_bound();
    let mut disc = vec![UNSET; bound];
    let mut low = vec![0u32; bound];
    let mut timer = 0u32;
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut frames: Vec<(Vertex, Vertex, usize)> = Vec::new();

    for root in g.vertices() {
        if disc[root as usize] != UNSET {
            continue;
        }
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        if g.degree(root) == 0 {
            blocks.push(vec![root]);
            continue;
        }
        frames.push((root, UNSET, 0));
        while let Some(&mut (v, parent, ref mut next)) = frames.last_mut() {
            let nbrs = g.neighbors(v);
            if *next < nbrs.len() {
                let w = nbrs[*next];
                *next += 1;
                if w == parent {
                    continue;
                }
                if disc[w as usize] == UNSET {
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    frames.push((w, v, 0));
                } else if disc[w as usize] < disc[v as usize] {
                    edge_stack.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
                continue;
            }
            frames.pop();
            if parent == UNSET {
                continue;
            }
            let p = parent as usize;
            low[p] = low[p].min(low[v as usize]);
            if low[v as usize] >= disc[p] {
                let mut members = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    members.push(a);
                    members.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                members.sort_unstable();
                members.dedup();
                blocks.push(members);
            }
        }
    }
    blocks.sort_unstable();

    let mut cut_blocks: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    let mut count = vec![0u32; bound];
    for b in blocks.iter().filter(|b| b.len() >= 2) {
        for &v in b {
            count[v as usize] += 1;
        }
    }
    let block_cuts: Vec<Vec<Vertex>> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let cuts: Vec<Vertex> = b
                .iter()
                .copied()
                .filter(|&v| count[v as usize] >= 2)
                .collect();
            for &c in &cuts {
                cut_blocks.entry(c).or_default().push(i);
            }
            cuts
        })
        .collect();
    let cut_vertices = cut_blocks.keys().copied().collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
        block_cuts,
        cut_blocks,
    }
}

pub fn classify_blocks(bd: &BlockDecomposition) -> Vec<BlockClass> {
    bd.blocks
        .iter()
        .zip(&bd.block_cuts)
        .map(|(b, cuts)| BlockClass {
            kind: match cuts.len() {
                0 => BlockKind::Isolated,
                1 => BlockKind::Leaf,
                _ => BlockKind::Internal,
            },
            is_edge_block: b.len() == 2,
            cut_vertices: cuts.clone(),
        })
        .collect()
}

pub fn is_block_graph(g: &Graph) -> bool {
    block_decomposition(g).blocks.iter().all(|b| g.is_clique(b))
}

/// Every leaf block is an edge block.
pub fn is_pointed(g: &Graph) -> bool {
    let bd = block_decomposition(g);
    classify_blocks(&bd)
        .iter()
        .all(|c| c.kind != BlockKind::Leaf || c.is_edge_block)
}

/// Removes isolated blocks entirely and every leaf block except its cut-vertex.
pub fn core(g: &Graph) -> Graph {
    let bd = block_decomposition(g);
    let mut drop = VertexSet::new();
    for (b, class) in bd.blocks.iter().zip(classify_blocks(&bd)) {
        match class.kind {
            BlockKind::Isolated => drop.extend(b.iter().copied()),
            BlockKind::Leaf => drop.extend(
                b.iter()
                    .copied()
                    .filter(|v| !class.cut_vertices.contains(v)),
            ),
            BlockKind::Internal => {}
        }
    }
    g.remove_vertices(&drop)
        .expect("block members belong to the graph")
}

/// Every internal block satisfying the near-leaf condition, in block order.
pub fn near_leaf_blocks(bd: &BlockDecomposition) -> Vec<NearLeafResult> {
    let classes = classify_blocks(bd);
    let mut out = Vec::new();
    for (i, class) in classes.iter().enumerate() {
        if class.kind != BlockKind::Internal {
            continue;
        }
        let mut via: Vec<Vertex> = bd
            .neighbours(i)
            .filter(|&(_, j)| classes[j].kind == BlockKind::Internal)
            .map(|(c, _)| c)
            .collect();
        via.dedup();
        if via.len() > 1 {
            continue;
        }
        let anchor = via.first().copied();
        out.push(NearLeafResult {
            block_index: i,
            block: bd.blocks[i].clone(),
            anchor,
            non_anchor_cut_vertices: class
                .cut_vertices
                .iter()
                .copied()
                .filter(|&c| Some(c) != anchor)
                .collect(),
        });
    }
    out
}

/// A near-leaf block of a connected, pointed graph that is neither a single
/// block nor a star. Picks the block with the smallest minimum vertex.
pub fn find_near_leaf_block(h: &Graph) -> Result<NearLeafResult> {
    if h.vertex_count() == 0 || !h.is_connected() {
        return Err(Error::Precondition(
            "near-leaf search needs a connected graph",
        ));
    }
    let bd = block_decomposition(h);
    if bd.cut_vertices.is_empty() {
        return Err(Error::Precondition("graph is a single block"));
    }
    if h.shape()? == Shape::Star {
        return Err(Error::Precondition("graph is a star"));
    }
    let pointed = classify_blocks(&bd)
        .iter()
        .all(|c| c.kind != BlockKind::Leaf || c.is_edge_block);
    if !pointed {
        return Err(Error::Precondition("graph is not pointed"));
    }
    near_leaf_blocks(&bd)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("no near-leaf block in a pointed non-star graph".into()))
}
