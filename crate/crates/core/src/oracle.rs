//! Exhaustive reference computations for small graphs.
//!
//! Nothing here is clever: candidate subgraphs are enumerated outright and
//! an exact set cover picks the fewest. The covering algorithm is checked
//! against these numbers, so the two share as little code as possible
//! (recognition and big-ant enumeration only).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::blocks::is_block_graph;
use crate::cointerval::{
    is_threshold, maximal_cointerval_subgraphs, maximal_threshold_subgraphs, BigAnt,
};
use crate::cover::{Cover, CoverElement, CoverKind};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSubgraph, Graph, Vertex};

/// Default vertex bound for enumerations that are exponential in `n`.
pub const DEFAULT_BOUND: usize = 9;
/// Masks are `u128` over edges and `u16` over vertices.
const HARD_BOUND: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance<T: Ord> {
    pub universe: BTreeSet<T>,
    pub candidates: Vec<BTreeSet<T>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverSolution {
    pub size: usize,
    /// Indices into the instance's candidates.
    pub chosen: Vec<usize>,
}

type Bits = Vec<u64>;

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn count(b: &Bits) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

/// Exact minimum set cover by iterative deepening on the cover size. Each
/// level branches on the lowest uncovered element, trying the candidates
/// containing it largest first; candidates subsumed by another are dropped
/// up front.
pub fn min_set_cover_exact<T: Ord + Clone>(inst: &SetCoverInstance<T>) -> Result<SetCoverSolution> {
    let index: BTreeMap<&T, usize> = inst
        .universe
        .iter()
        .enumerate()
        .map(|(i, x)| (x, i))
        .collect();
    let n = index.len();
    let words = n.div_ceil(64).max(1);
    let mut sets: Vec<(Bits, usize)> = Vec::new();
    for (ci, cand) in inst.candidates.iter().enumerate() {
        let mut b = vec![0u64; words];
        for x in cand {
            let i = *index.get(x).ok_or(Error::Infeasible)?;
            b[i / 64] |= 1 << (i % 64);
        }
        sets.push((b, ci));
    }
    let subset = |a: &Bits, b: &Bits| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let mut kept: Vec<(Bits, usize)> = Vec::new();
    for (i, (a, ci)) in sets.iter().enumerate() {
        let dominated = sets
            .iter()
            .enumerate()
            .any(|(j, (b, _))| if a == b { j < i } else { subset(a, b) });
        if !dominated && count(a) > 0 {
            kept.push((a.clone(), *ci));
        }
    }
    kept.sort_by_key(|(b, ci)| (core::cmp::Reverse(count(b)), *ci));

    let mut all = vec![0u64; words];
    for i in 0..n {
        all[i / 64] |= 1 << (i % 64);
    }
    let mut union = vec![0u64; words];
    for (b, _) in &kept {
        for (u, w) in union.iter_mut().zip(b) {
            *u |= w;
        }
    }
    if union != all {
        return Err(Error::Infeasible);
    }
    let containing: Vec<Vec<usize>> = (0..n)
        .map(|e| (0..kept.len()).filter(|&k| bit(&kept[k].0, e)).collect())
        .collect();
    let largest = kept.first().map_or(0, |(b, _)| count(b));

    let mut chosen = Vec::new();
    for k in 0.. {
        if search(&kept, &containing, largest, &all, k, &mut chosen) {
            let mut picked: Vec<usize> = chosen.iter().map(|&i| kept[i].1).collect();
            picked.sort_unstable();
            return Ok(SetCoverSolution {
                size: k,
                chosen: picked,
            });
        }
    }
    unreachable!("a feasible instance is covered by all of its candidates")
}

fn search(
    sets: &[(Bits, usize)],
    containing: &[Vec<usize>],
    largest: usize,
    uncovered: &Bits,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let left = count(uncovered);
    if left == 0 {
        return true;
    }
    if budget == 0 || largest * budget < left {
        return false;
    }
    let first = uncovered
        .iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
        .unwrap_or(0);
    for &k in &containing[first] {
        let rest: Bits = uncovered
            .iter()
            .zip(&sets[k].0)
            .map(|(u, s)| u & !s)
            .collect();
        chosen.push(k);
        if search(sets, containing, largest, &rest, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Local indexing of a small general graph for mask arithmetic.
struct Dense {
    verts: Vec<Vertex>,
    edges: Vec<Edge>,
    /// neighbours as vertex masks
    nbr: Vec<u16>,
    /// `edge_id[a][b]` for local indices
    edge_id: Vec<Vec<usize>>,
}

impl Dense {
    fn new(g: &Graph, bound: usize) -> Result<Self> {
        let n = g.vertex_count();
        if n > bound.min(HARD_BOUND) {
            return Err(Error::TooLarge {
                n,
                bound: bound.min(HARD_BOUND),
            });
        }
        let verts: Vec<Vertex> = g.vertices().collect();
        let local = |v: Vertex| verts.binary_search(&v).unwrap();
        let edges: Vec<Edge> = g.edges().collect();
        let mut nbr = vec![0u16; n];
        let mut edge_id = vec![vec![usize::MAX; n]; n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            let (a, b) = (local(a), local(b));
            nbr[a] |= 1 << b;
            nbr[b] |= 1 << a;
            edge_id[a][b] = i;
            edge_id[b][a] = i;
        }
        Ok(Dense {
            verts,
            edges,
            nbr,
            edge_id,
        })
    }

    fn edge_set(&self, mask: u128) -> BTreeSet<Edge> {
        (0..self.edges.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.edges[i])
            .collect()
    }

    fn star_edges(&self, x: usize, live: u16) -> u128 {
        (0..self.verts.len())
            .filter(|&y| live >> y & 1 == 1)
            .fold(0u128, |m, y| m | 1 << self.edge_id[x][y])
    }
}

fn maximal_masks(masks: BTreeSet<u128>) -> Vec<u128> {
    let all: Vec<u128> = masks.into_iter().filter(|&m| m != 0).collect();
    all.iter()
        .copied()
        .filter(|&a| !all.iter().any(|&b| b != a && a & !b == 0))
        .collect()
}

/// Every σ-subgraph edge set of `g`, as masks. Orderings are explored as a
/// prefix tree; once the surviving neighbourhood is empty the rest of the
/// ordering adds nothing, and states already seen are skipped.
fn sigma_masks(d: &Dense) -> BTreeSet<u128> {
    let n = d.verts.len();
    let mut out = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut stack: Vec<(u16, u16, u128)> = Vec::new();
    for x in 0..n {
        let live = d.nbr[x];
        stack.push((1 << x, live, d.star_edges(x, live)));
    }
    while let Some((used, live, edges)) = stack.pop() {
        if !seen.insert((used, live, edges)) {
            continue;
        }
        if live == 0 || used.count_ones() as usize == n {
            out.insert(edges);
            continue;
        }
        for x in 0..n {
            if used >> x & 1 == 1 {
                continue;
            }
            let next = live & d.nbr[x];
            stack.push((used | 1 << x, next, edges | d.star_edges(x, next)));
        }
    }
    out
}

/// Containment-maximal co-interval edge sets. Block graphs use big ants at
/// any size; other graphs enumerate all orderings and need `n <= bound`.
pub fn enumerate_maximal_cointerval_edge_sets(
    g: &Graph,
    bound: usize,
) -> Result<Vec<BTreeSet<Edge>>> {
    if is_block_graph(g) {
        return Ok(maximal_cointerval_subgraphs(g)?
            .iter()
            .map(|a| a.edges(g))
            .collect());
    }
    maximal_cointerval_edge_sets_by_orderings(g, bound)
}

/// The general enumeration behind [`enumerate_maximal_cointerval_edge_sets`],
/// for any graph with `n <= bound`, block graph or not.
pub fn maximal_cointerval_edge_sets_by_orderings(
    g: &Graph,
    bound: usize,
) -> Result<Vec<BTreeSet<Edge>>> {
    let d = Dense::new(g, bound)?;
    Ok(maximal_masks(sigma_masks(&d))
        .into_iter()
        .map(|m| d.edge_set(m))
        .collect())
}

/// Containment-maximal threshold edge sets. Block graphs use the
/// single-apex ants; other graphs grow threshold edge sets one edge at a time
/// from every single edge.
pub fn enumerate_maximal_threshold_edge_sets(
    g: &Graph,
    bound: usize,
) -> Result<Vec<BTreeSet<Edge>>> {
    if is_block_graph(g) {
        return Ok(maximal_threshold_subgraphs(g)?
            .iter()
            .map(|a| a.edges(g))
            .collect());
    }
    maximal_threshold_edge_sets_by_growth(g, bound)
}

/// The general enumeration behind [`enumerate_maximal_threshold_edge_sets`].
pub fn maximal_threshold_edge_sets_by_growth(
    g: &Graph,
    bound: usize,
) -> Result<Vec<BTreeSet<Edge>>> {
    let d = Dense::new(g, bound)?;
    let m = d.edges.len();
    let mut seen: BTreeSet<u128> = BTreeSet::new();
    let mut stack: Vec<u128> = (0..m).map(|i| 1u128 << i).collect();
    while let Some(mask) = stack.pop() {
        if !seen.insert(mask) {
            continue;
        }
        for i in 0..m {
            let next = mask | 1 << i;
            if next != mask && !seen.contains(&next) {
                let h = EdgeSubgraph::from_edges(d.edge_set(next)).to_graph()?;
                if is_threshold(&h) {
                    stack.push(next);
                }
            }
        }
    }
    Ok(maximal_masks(seen)
        .into_iter()
        .map(|m| d.edge_set(m))
        .collect())
}

fn brute_cover(g: &Graph, kind: CoverKind, bound: usize) -> Result<Cover> {
    if g.edge_count() == 0 {
        return Ok(Cover {
            kind,
            elements: Vec::new(),
        });
    }
    // block graphs keep the ant behind each candidate for the witness
    let (candidates, ants): (Vec<BTreeSet<Edge>>, Vec<Option<BigAnt>>) = if is_block_graph(g) {
        let ants = match kind {
            CoverKind::Cointerval => maximal_cointerval_subgraphs(g)?,
            CoverKind::Threshold => maximal_threshold_subgraphs(g)?,
        };
        (
            ants.iter().map(|a| a.edges(g)).collect(),
            ants.into_iter().map(Some).collect(),
        )
    } else {
        let sets = match kind {
            CoverKind::Cointerval => enumerate_maximal_cointerval_edge_sets(g, bound)?,
            CoverKind::Threshold => enumerate_maximal_threshold_edge_sets(g, bound)?,
        };
        let n = sets.len();
        (sets, vec![None; n])
    };
    let inst = SetCoverInstance {
        universe: g.edges().collect(),
        candidates,
    };
    let solution = min_set_cover_exact(&inst)?;
    let elements = solution
        .chosen
        .iter()
        .map(|&i| CoverElement {
            ant: ants[i].clone(),
            subgraph: EdgeSubgraph::from_edges(inst.candidates[i].iter().copied()),
        })
        .collect();
    Ok(Cover { kind, elements })
}

/// An optimal co-interval cover found by exhaustive search.
pub fn brute_cointerval_cover(g: &Graph, bound: usize) -> Result<Cover> {
    brute_cover(g, CoverKind::Cointerval, bound)
}

/// An optimal threshold cover found by exhaustive search.
pub fn brute_threshold_cover(g: &Graph, bound: usize) -> Result<Cover> {
    brute_cover(g, CoverKind::Threshold, bound)
}

pub fn brute_coboxicity(g: &Graph) -> Result<usize> {
    Ok(brute_cointerval_cover(g, DEFAULT_BOUND)?.len())
}

pub fn brute_cothdim(g: &Graph) -> Result<usize> {
    Ok(brute_threshold_cover(g, DEFAULT_BOUND)?.len())
}
