//! Co-interval recognition.
//!
//! A co-interval graph is the comparability graph of an interval order, and
//! every transitive orientation of it is such an order. We orient the graph
//! by implication classes, then read an interval model off the chain of
//! predecessor sets. Whatever comes out is checked against the graph, so a
//! failed orientation or a non-chain simply means "not co-interval".

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::VertexOrder;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
}

impl Interval {
    pub fn new(lo: u32, hi: u32) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalRepresentation {
    pub intervals: BTreeMap<Vertex, Interval>,
}

impl IntervalRepresentation {
    pub fn get(&self, v: Vertex) -> Option<Interval> {
        self.intervals.get(&v).copied()
    }

    /// True when the vertices are exactly those of `h` and two intervals are
    /// disjoint exactly when their vertices are adjacent.
    pub fn realizes(&self, h: &Graph) -> bool {
        if !self.intervals.keys().copied().eq(h.vertices()) {
            return false;
        }
        let items: Vec<(Vertex, Interval)> = self.intervals.iter().map(|(&v, &i)| (v, i)).collect();
        items.iter().enumerate().all(|(i, &(a, ia))| {
            items[i + 1..]
                .iter()
                .all(|&(b, ib)| ia.intersects(&ib) != h.has_edge(a, b))
        })
    }

    /// Vertices sorted by right endpoint (ties by id).
    pub fn right_endpoint_order(&self) -> VertexOrder {
        let mut vs: Vec<(u32, Vertex)> = self.intervals.iter().map(|(&v, i)| (i.hi, v)).collect();
        vs.sort_unstable();
        VertexOrder::new(vs.into_iter().map(|(_, v)| v).collect())
    }
}

/// An ordering with the prefix property when `h` is co-interval.
pub fn is_cointerval(h: &Graph) -> Option<VertexOrder> {
    interval_model(h).map(|rep| rep.right_endpoint_order())
}

pub fn cointerval_representation(h: &Graph) -> Result<IntervalRepresentation> {
    interval_model(h).ok_or(Error::NotCointerval)
}

fn interval_model(h: &Graph) -> Option<IntervalRepresentation> {
    let verts: Vec<Vertex> = h.vertices().collect();
    let n = verts.len();
    let mut local = vec![usize::MAX; h.id_bound()];
    for (i, &v) in verts.iter().enumerate() {
        local[v as usize] = i;
    }
    let mut adj = vec![vec![false; n]; n];
    for (a, b) in h.edges() {
        let (a, b) = (local[a as usize], local[b as usize]);
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let arcs = transitive_orientation(adj)?;

    let words = n.div_ceil(64).max(1);
    let mut preds = vec![vec![0u64; words]; n];
    for (a, b) in arcs {
        preds[b][a / 64] |= 1 << (a % 64);
    }
    let mut by_size: Vec<usize> = (0..n).collect();
    by_size.sort_by_key(|&x| (popcount(&preds[x]), x));
    // distinct predecessor sets must form a chain under inclusion
    let mut chain: Vec<&[u64]> = Vec::new();
    let mut level = vec![0u32; n];
    for &x in &by_size {
        let p = preds[x].as_slice();
        match chain.last() {
            Some(&last) if last == p => {}
            Some(&last) if !is_subset(last, p) => return None,
            _ => chain.push(p),
        }
        level[x] = (chain.len() - 1) as u32;
    }
    let top = chain.len().saturating_sub(1) as u32;
    let mut intervals = BTreeMap::new();
    for x in 0..n {
        let first_containing = chain
            .iter()
            .position(|set| set[x / 64] >> (x % 64) & 1 == 1)
            .map(|i| i as u32);
        let right = match first_containing {
            Some(i) => i - 1,
            None => top,
        };
        intervals.insert(verts[x], Interval::new(2 * level[x], 2 * right + 1));
    }
    let rep = IntervalRepresentation { intervals };
    rep.realizes(h).then_some(rep)
}

fn popcount(bits: &[u64]) -> u32 {
    bits.iter().map(|w| w.count_ones()).sum()
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Golumbic's implication-class decomposition. Returns the arcs of a
/// transitive orientation, or `None` if some class contains an arc together
/// with its reverse.
fn transitive_orientation(mut adj: Vec<Vec<bool>>) -> Option<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut mark = vec![vec![0u32; n]; n];
    let mut class = 0u32;
    let mut arcs = Vec::new();
    let mut queue = Vec::new();
    let mut members = Vec::new();
    let mut scan = 0usize;
    loop {
        // next remaining edge, scanning rows in order
        let mut start = None;
        while scan < n {
            if let Some(b) = (0..n).find(|&b| adj[scan][b]) {
                start = Some((scan, b));
                break;
            }
            scan += 1;
        }
        let Some((a, b)) = start else {
            return Some(arcs);
        };
        class += 1;
        members.clear();
        mark[a][b] = class;
        queue.push((a, b));
        while let Some((x, y)) = queue.pop() {
            members.push((x, y));
            // rows are symmetric, so `near_y[z]` also stands for the arc z -> y
            for (z, (&near_x, &near_y)) in adj[x].iter().zip(&adj[y]).enumerate() {
                // same tail, non-adjacent heads
                if z != y && near_x && !near_y {
                    force(&mut mark, class, x, z, &mut queue)?;
                }
                // same head, non-adjacent tails
                if z != x && near_y && !near_x {
                    force(&mut mark, class, z, y, &mut queue)?;
                }
            }
        }
        for &(x, y) in &members {
            adj[x][y] = false;
            adj[y][x] = false;
        }
        arcs.extend_from_slice(&members);
    }
}

/// Adds arc `p -> q` to the current class. `None` on a reversed arc.
fn force(
    mark: &mut [Vec<u32>],
    class: u32,
    p: usize,
    q: usize,
    queue: &mut Vec<(usize, usize)>,
) -> Option<()> {
    if mark[q][p] == class {
        return None;
    }
    if mark[p][q] != class {
        mark[p][q] = class;
        queue.push((p, q));
    }
    Some(())
}
