//! Residual-graph bookkeeping for the covering loop.
//!
//! Deleting vertices from a block graph never merges or splits blocks: each
//! block of the residual graph is an original block restricted to its
//! surviving members, provided at least two survive. So the residual block
//! structure is carried by counters. Every derived flag below is monotone
//! (or toggles at most twice), and each flip touches one adjacency list of
//! the block-cut incidence structure, which keeps the whole run near-linear.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Cover, CoverElement, CoverKind, CoverOptions, IterationTrace, Step};
use crate::blocks::block_decomposition;
use crate::cointerval::BigAnt;
use crate::error::{Error, Result};
use crate::graph::{edge, EdgeSubgraph, Graph, Vertex};

#[derive(Clone, Copy)]
enum Node {
    Block(u32),
    Vertex(Vertex),
}

struct Residual {
    members: Vec<Vec<Vertex>>,
    vertex_blocks: Vec<Vec<u32>>,
    alive: Vec<bool>,
    degree: Vec<u32>,
    edges_left: usize,

    // per block: counters, then published flags
    b_alive: Vec<u32>,
    b_cuts: Vec<u32>,
    b_heavy: Vec<u32>,
    b_live: Vec<bool>,
    b_internal: Vec<bool>,
    b_pendant: Vec<bool>,

    // per vertex: counters, then published flags
    v_live: Vec<u32>,
    v_internal: Vec<u32>,
    v_pendant: Vec<u32>,
    v_cut: Vec<bool>,
    v_heavy: Vec<bool>,

    dirty_b: Vec<bool>,
    dirty_v: Vec<bool>,
    work: Vec<Node>,

    /// isolated live blocks: the whole component is a clique
    cliques: BTreeSet<u32>,
    /// cut-vertices whose blocks are all pendant edges
    stars: BTreeSet<Vertex>,
    /// leaf blocks with at least three live members
    big_leaves: BTreeSet<u32>,
    near_leaves: BTreeSet<u32>,
}

fn bump(counter: &mut u32, up: bool) {
    if up {
        *counter += 1;
    } else {
        *counter -= 1;
    }
}

impl Residual {
    fn new(g: &Graph) -> Result<Self> {
        let bd = block_decomposition(g);
        let bound = g.id_bound();
        let mut members = Vec::new();
        let mut vertex_blocks = vec![Vec::new(); bound];
        for block in bd.blocks().iter().filter(|b| b.len() >= 2) {
            if !g.is_clique(block) {
                return Err(Error::NotBlockGraph);
            }
            let id = members.len() as u32;
            for &v in block {
                vertex_blocks[v as usize].push(id);
            }
            members.push(block.clone());
        }
        let nb = members.len();
        let mut alive = vec![false; bound];
        let mut degree = vec![0u32; bound];
        for v in g.vertices() {
            alive[v as usize] = true;
            degree[v as usize] = g.degree(v) as u32;
        }
        let b_alive = members.iter().map(|m| m.len() as u32).collect();
        let mut r = Residual {
            members,
            vertex_blocks,
            alive,
            degree,
            edges_left: g.edge_count(),
            b_alive,
            b_cuts: vec![0; nb],
            b_heavy: vec![0; nb],
            b_live: vec![false; nb],
            b_internal: vec![false; nb],
            b_pendant: vec![false; nb],
            v_live: vec![0; bound],
            v_internal: vec![0; bound],
            v_pendant: vec![0; bound],
            v_cut: vec![false; bound],
            v_heavy: vec![false; bound],
            dirty_b: vec![false; nb],
            dirty_v: vec![false; bound],
            work: Vec::new(),
            cliques: BTreeSet::new(),
            stars: BTreeSet::new(),
            big_leaves: BTreeSet::new(),
            near_leaves: BTreeSet::new(),
        };
        // all flags start cleared; one settling pass publishes them
        for b in 0..nb as u32 {
            r.mark(Node::Block(b));
        }
        r.settle();
        Ok(r)
    }

    fn mark(&mut self, node: Node) {
        let dirty = match node {
            Node::Block(b) => &mut self.dirty_b[b as usize],
            Node::Vertex(v) => &mut self.dirty_v[v as usize],
        };
        if !*dirty {
            *dirty = true;
            self.work.push(node);
        }
    }

    fn settle(&mut self) {
        while let Some(node) = self.work.pop() {
            match node {
                Node::Block(b) => {
                    self.dirty_b[b as usize] = false;
                    self.refresh_block(b);
                }
                Node::Vertex(v) => {
                    self.dirty_v[v as usize] = false;
                    self.refresh_vertex(v);
                }
            }
        }
    }

    fn touch_members(&mut self, b: u32, up: bool, counter: fn(&mut Residual) -> &mut Vec<u32>) {
        for i in 0..self.members[b as usize].len() {
            let x = self.members[b as usize][i];
            if self.alive[x as usize] {
                bump(&mut counter(self)[x as usize], up);
                self.mark(Node::Vertex(x));
            }
        }
    }

    fn touch_blocks(&mut self, x: Vertex, up: bool, counter: fn(&mut Residual) -> &mut Vec<u32>) {
        for i in 0..self.vertex_blocks[x as usize].len() {
            let b = self.vertex_blocks[x as usize][i];
            bump(&mut counter(self)[b as usize], up);
            self.mark(Node::Block(b));
        }
    }

    fn refresh_block(&mut self, b: u32) {
        let i = b as usize;
        let live = self.b_alive[i] >= 2;
        if live != self.b_live[i] {
            self.b_live[i] = live;
            self.touch_members(b, live, |r| &mut r.v_live);
        }
        let internal = live && self.b_cuts[i] >= 2;
        if internal != self.b_internal[i] {
            self.b_internal[i] = internal;
            self.touch_members(b, internal, |r| &mut r.v_internal);
        }
        let pendant = live && self.b_cuts[i] == 1 && self.b_alive[i] == 2;
        if pendant != self.b_pendant[i] {
            self.b_pendant[i] = pendant;
            self.touch_members(b, pendant, |r| &mut r.v_pendant);
        }
        set_membership(&mut self.cliques, b, live && self.b_cuts[i] == 0);
        set_membership(
            &mut self.big_leaves,
            b,
            live && self.b_cuts[i] == 1 && self.b_alive[i] >= 3,
        );
        set_membership(&mut self.near_leaves, b, internal && self.b_heavy[i] <= 1);
    }

    fn refresh_vertex(&mut self, x: Vertex) {
        let i = x as usize;
        let cut = self.alive[i] && self.v_live[i] >= 2;
        if cut != self.v_cut[i] {
            self.v_cut[i] = cut;
            self.touch_blocks(x, cut, |r| &mut r.b_cuts);
        }
        let heavy = cut && self.v_internal[i] >= 2;
        if heavy != self.v_heavy[i] {
            self.v_heavy[i] = heavy;
            self.touch_blocks(x, heavy, |r| &mut r.b_heavy);
        }
        set_membership(
            &mut self.stars,
            x,
            cut && self.v_pendant[i] == self.v_live[i],
        );
    }

    fn kill(&mut self, x: Vertex) {
        let i = x as usize;
        if !self.alive[i] {
            return;
        }
        self.alive[i] = false;
        for k in 0..self.vertex_blocks[i].len() {
            let b = self.vertex_blocks[i][k] as usize;
            if self.b_alive[b] >= 2 {
                self.edges_left -= (self.b_alive[b] - 1) as usize;
                for &y in &self.members[b] {
                    if self.alive[y as usize] {
                        self.degree[y as usize] -= 1;
                    }
                }
            }
            self.b_alive[b] -= 1;
            self.mark(Node::Block(b as u32));
        }
        self.degree[i] = 0;
        self.mark(Node::Vertex(x));
    }

    fn live_members(&self, b: u32) -> Vec<Vertex> {
        self.members[b as usize]
            .iter()
            .copied()
            .filter(|&x| self.alive[x as usize])
            .collect()
    }

    fn neighbors(&self, x: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        for &b in &self.vertex_blocks[x as usize] {
            if self.b_alive[b as usize] >= 2 {
                out.extend(
                    self.members[b as usize]
                        .iter()
                        .copied()
                        .filter(|&y| y != x && self.alive[y as usize]),
                );
            }
        }
        out.sort_unstable();
        out
    }

    /// Degree-one neighbours of `x`.
    fn pendant_leaves(&self, x: Vertex) -> Vec<Vertex> {
        self.neighbors(x)
            .into_iter()
            .filter(|&y| self.degree[y as usize] == 1)
            .collect()
    }

    fn component(&self, root: Vertex) -> Vec<Vertex> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(root);
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The big ant on the clique `block` with apexes `u`, `v` in the residual graph.
    fn ant(&self, block: Vec<Vertex>, u: Vertex, v: Vertex) -> CoverElement {
        let mut edges = Vec::new();
        for (i, &a) in block.iter().enumerate() {
            edges.extend(block[i + 1..].iter().map(|&b| edge(a, b)));
        }
        for apex in [u, v] {
            edges.extend(self.neighbors(apex).into_iter().map(|w| edge(apex, w)));
        }
        let mut subgraph = EdgeSubgraph::from_edges(edges);
        if subgraph.vertices.is_empty() {
            subgraph.vertices = block.clone();
        }
        CoverElement {
            ant: Some(BigAnt { block, u, v }),
            subgraph,
        }
    }
}

fn set_membership<T: Ord>(set: &mut BTreeSet<T>, key: T, member: bool) {
    if member {
        set.insert(key);
    } else {
        set.remove(&key);
    }
}

fn sorted(mut vs: Vec<Vertex>) -> Vec<Vertex> {
    vs.sort_unstable();
    vs.dedup();
    vs
}

pub(super) fn run(
    g: &Graph,
    kind: CoverKind,
    opts: &CoverOptions,
) -> Result<(Cover, Vec<IterationTrace>)> {
    let mut r = Residual::new(g)?;
    let mut cover = Cover {
        kind,
        elements: Vec::new(),
    };
    let mut traces = Vec::new();
    while r.edges_left > 0 {
        let (step, element, removed, protected, cut_vertices) = choose(&r, kind)?;
        let component = opts.record_components.then(|| r.component(removed[0]));
        let block = element
            .ant
            .as_ref()
            .map(|a| a.block.clone())
            .unwrap_or_default();
        let apexes = element.ant.as_ref().map(|a| (a.u, a.v));
        let before = r.edges_left;
        for &x in &removed {
            r.kill(x);
        }
        r.settle();
        if removed.is_empty() || r.edges_left >= before {
            return Err(Error::Internal(format!(
                "iteration {} made no progress",
                traces.len()
            )));
        }
        traces.push(IterationTrace {
            step,
            component,
            block,
            protected,
            apexes,
            block_cut_vertices: cut_vertices,
            removed,
            element: cover.elements.len(),
        });
        cover.elements.push(element);
    }
    Ok((cover, traces))
}

type Choice = (Step, CoverElement, Vec<Vertex>, Option<Vertex>, Vec<Vertex>);

fn choose(r: &Residual, kind: CoverKind) -> Result<Choice> {
    if let Some(&b) = r.cliques.first() {
        let block = r.live_members(b);
        let apex = block[0];
        let element = r.ant(block.clone(), apex, apex);
        return Ok((Step::CliqueOrStar, element, block, None, Vec::new()));
    }
    if let Some(&center) = r.stars.first() {
        let spoke = r.vertex_blocks[center as usize]
            .iter()
            .copied()
            .find(|&b| r.b_live[b as usize])
            .ok_or_else(|| Error::Internal(format!("star center {center} has no live block")))?;
        let element = r.ant(r.live_members(spoke), center, center);
        let mut removed = r.neighbors(center);
        removed.push(center);
        return Ok((
            Step::CliqueOrStar,
            element,
            sorted(removed),
            None,
            Vec::new(),
        ));
    }
    if let Some(&b) = r.big_leaves.first() {
        let block = r.live_members(b);
        let cut = block
            .iter()
            .copied()
            .find(|&x| r.v_cut[x as usize])
            .ok_or_else(|| Error::Internal(format!("leaf block {b} has no cut-vertex")))?;
        let element = r.ant(block.clone(), cut, cut);
        return Ok((Step::LargeLeafBlock, element, block, Some(cut), vec![cut]));
    }
    let Some(&b) = r.near_leaves.first() else {
        return Err(Error::Internal(format!(
            "{} edges left but no case applies",
            r.edges_left
        )));
    };
    let block = r.live_members(b);
    let cuts: Vec<Vertex> = block
        .iter()
        .copied()
        .filter(|&x| r.v_cut[x as usize])
        .collect();
    let anchor = block.iter().copied().find(|&x| r.v_heavy[x as usize]);
    let v = anchor.unwrap_or(cuts[0]);
    let others: Vec<Vertex> = cuts.iter().copied().filter(|&x| x != v).collect();
    let u = others[0];

    if kind == CoverKind::Threshold {
        let element = r.ant(block, u, u);
        let removed = if cuts.len() == 2 {
            element
                .subgraph
                .vertices
                .iter()
                .copied()
                .filter(|&x| x != v)
                .collect()
        } else {
            let mut s = r.pendant_leaves(u);
            s.push(u);
            sorted(s)
        };
        let step = if cuts.len() == 2 {
            Step::ThresholdNearLeafTwoCuts
        } else {
            Step::ThresholdNearLeafManyCuts
        };
        return Ok((step, element, removed, Some(v), cuts));
    }

    if cuts.len() == 2 {
        let mut removed = r.neighbors(u);
        removed.extend_from_slice(&block);
        let element = r.ant(block, u, v);
        return Ok((
            Step::NearLeafTwoCuts,
            element,
            sorted(removed),
            Some(v),
            cuts,
        ));
    }
    let w = others[1];
    let element = r.ant(block, u, w);
    let removed = if cuts.len() == 3 {
        element
            .subgraph
            .vertices
            .iter()
            .copied()
            .filter(|&x| x != v)
            .collect()
    } else {
        let mut s = r.pendant_leaves(u);
        s.extend(r.pendant_leaves(w));
        s.push(u);
        s.push(w);
        sorted(s)
    };
    Ok((Step::NearLeafManyCuts, element, removed, Some(v), cuts))
}
