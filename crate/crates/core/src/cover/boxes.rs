use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{verify_cover, Cover, CoverElement};
use crate::cointerval::{cointerval_representation, Interval, IntervalRepresentation};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// One axis-parallel box per vertex; `boxes[v][i]` is the extent along axis `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRepresentation {
    pub dimension: usize,
    pub boxes: BTreeMap<Vertex, Vec<Interval>>,
}

impl BoxRepresentation {
    pub fn disjoint(&self, a: Vertex, b: Vertex) -> bool {
        match (self.boxes.get(&a), self.boxes.get(&b)) {
            (Some(x), Some(y)) => x.iter().zip(y).any(|(i, j)| !i.intersects(j)),
            _ => false,
        }
    }

    /// Boxes are disjoint exactly for the edges of `g`, checked over all pairs.
    pub fn realizes(&self, g: &Graph) -> bool {
        if !self.boxes.keys().copied().eq(g.vertices())
            || self.boxes.values().any(|b| b.len() != self.dimension)
        {
            return false;
        }
        let vs: Vec<Vertex> = g.vertices().collect();
        vs.iter().enumerate().all(|(i, &a)| {
            vs[i + 1..]
                .iter()
                .all(|&b| self.disjoint(a, b) == g.has_edge(a, b))
        })
    }
}

fn element_representation(el: &CoverElement) -> Result<IntervalRepresentation> {
    let h = el.subgraph.to_graph()?;
    if let Some(ant) = &el.ant {
        // the explicit ant layout applies when the element is exactly that
        // ant of itself
        if h.is_clique(&ant.block)
            && ant
                .edges(&h)
                .into_iter()
                .eq(el.subgraph.edges.iter().copied())
        {
            let rep = ant.representation(&h);
            if rep.realizes(&h) {
                return Ok(rep);
            }
        }
    }
    cointerval_representation(&h)
}

pub fn cover_to_box_representation(g: &Graph, c: &Cover) -> Result<BoxRepresentation> {
    let report = verify_cover(g, c);
    if !report.is_valid() {
        return Err(Error::InvalidCover(report.summary()));
    }
    if c.elements.is_empty() {
        let boxes = g
            .vertices()
            .map(|v| (v, vec![Interval::new(0, 0)]))
            .collect();
        return Ok(BoxRepresentation {
            dimension: 1,
            boxes,
        });
    }
    let mut boxes: BTreeMap<Vertex, Vec<Interval>> =
        g.vertices().map(|v| (v, Vec::new())).collect();
    for el in &c.elements {
        let rep = element_representation(el)?;
        let max = rep.intervals.values().map(|i| i.hi).max().unwrap_or(0);
        for (v, b) in boxes.iter_mut() {
            b.push(rep.get(*v).unwrap_or(Interval::new(0, max)));
        }
    }
    Ok(BoxRepresentation {
        dimension: c.elements.len(),
        boxes,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{min_cointerval_cover, CoverKind};
    use super::*;
    use crate::graph::{build_graph, EdgeSubgraph};

    #[test]
    fn k2_boxes() {
        let k2 = build_graph(2, &[(0, 1)]).unwrap();
        let (c, _) = min_cointerval_cover(&k2).unwrap();
        let b = cover_to_box_representation(&k2, &c).unwrap();
        assert_eq!(b.dimension, 1);
        assert!(b.disjoint(0, 1));
        assert!(b.realizes(&k2));
    }

    #[test]
    fn p7_boxes() {
        let p7 = build_graph(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let (c, _) = min_cointerval_cover(&p7).unwrap();
        let b = cover_to_box_representation(&p7, &c).unwrap();
        assert_eq!(b.dimension, 2);
        assert!(b.realizes(&p7));
    }

    #[test]
    fn edgeless_promoted_to_one_dimension() {
        let g = Graph::with_vertices(4);
        let (c, _) = min_cointerval_cover(&g).unwrap();
        let b = cover_to_box_representation(&g, &c).unwrap();
        assert_eq!(b.dimension, 1);
        assert!(b.realizes(&g));
        assert!(b.boxes.values().all(|x| x == &b.boxes[&0]));
    }

    #[test]
    fn invalid_cover_rejected() {
        let p3 = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        let c = Cover {
            kind: CoverKind::Cointerval,
            elements: vec![CoverElement {
                ant: None,
                subgraph: EdgeSubgraph::from_edges(vec![(0, 1)]),
            }],
        };
        assert!(matches!(
            cover_to_box_representation(&p3, &c),
            Err(Error::InvalidCover(_))
        ));
    }
}
