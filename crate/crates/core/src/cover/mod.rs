//! Minimum co-interval and threshold covers of block graphs.
//!
//! The covering loop repeatedly takes a piece of the residual graph, adds a
//! big ant that swallows every edge at some set of vertices, and deletes
//! those vertices. Free choices are resolved globally: a clique or star
//! component first (lowest block index, then lowest centre), then a leaf
//! block with three or more vertices, then a near-leaf block; ties go to
//! the lowest original block index.

mod boxes;
mod engine;

pub use boxes::{cover_to_box_representation, BoxRepresentation};

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::blocks::block_decomposition;
use crate::cointerval::{is_cointerval, is_threshold, BigAnt};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, EdgeSubgraph, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverKind {
    Cointerval,
    Threshold,
}

impl CoverKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverKind::Cointerval => "cointerval",
            CoverKind::Threshold => "threshold",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "cointerval" => Some(CoverKind::Cointerval),
            "threshold" => Some(CoverKind::Threshold),
            _ => None,
        }
    }

    /// Whether `h` passes this kind's recognition predicate.
    pub fn accepts(self, h: &Graph) -> bool {
        match self {
            CoverKind::Cointerval => is_cointerval(h).is_some(),
            CoverKind::Threshold => is_threshold(h),
        }
    }
}

/// One member of a cover. Covers built by the algorithm or the block-graph
/// oracle remember which big ant produced the element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverElement {
    pub ant: Option<BigAnt>,
    pub subgraph: EdgeSubgraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub kind: CoverKind,
    pub elements: Vec<CoverElement>,
}

impl Cover {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Which branch of the loop produced an iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// the component is a clique or a star
    CliqueOrStar,
    /// a leaf block with at least three vertices
    LargeLeafBlock,
    NearLeafTwoCuts,
    NearLeafManyCuts,
    ThresholdNearLeafTwoCuts,
    ThresholdNearLeafManyCuts,
}

impl Step {
    pub fn label(self) -> &'static str {
        match self {
            Step::CliqueOrStar => "1",
            Step::LargeLeafBlock => "2",
            Step::NearLeafTwoCuts => "3a",
            Step::NearLeafManyCuts => "3b",
            Step::ThresholdNearLeafTwoCuts => "3*-2cuts",
            Step::ThresholdNearLeafManyCuts => "3*-many",
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationTrace {
    pub step: Step,
    /// The residual component the iteration worked in; only filled when
    /// [`CoverOptions::record_components`] is set.
    pub component: Option<Vec<Vertex>>,
    /// Live members of the chosen block (for a star: one spoke).
    pub block: Vec<Vertex>,
    /// The vertex kept alive on purpose (`v`), if any.
    pub protected: Option<Vertex>,
    pub apexes: Option<(Vertex, Vertex)>,
    /// Cut-vertices of the chosen block in the residual graph.
    pub block_cut_vertices: Vec<Vertex>,
    pub removed: Vec<Vertex>,
    pub element: usize,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CoverOptions {
    /// Store each iteration's residual component in the trace. Costs time
    /// proportional to the component, so it is off for large runs.
    pub record_components: bool,
}

pub fn min_cover_with(
    g: &Graph,
    kind: CoverKind,
    opts: &CoverOptions,
) -> Result<(Cover, Vec<IterationTrace>)> {
    engine::run(g, kind, opts)
}

pub fn min_cointerval_cover(g: &Graph) -> Result<(Cover, Vec<IterationTrace>)> {
    min_cover_with(
        g,
        CoverKind::Cointerval,
        &CoverOptions {
            record_components: true,
        },
    )
}

pub fn min_threshold_cover(g: &Graph) -> Result<(Cover, Vec<IterationTrace>)> {
    min_cover_with(
        g,
        CoverKind::Threshold,
        &CoverOptions {
            record_components: true,
        },
    )
}

pub fn coboxicity(g: &Graph) -> Result<usize> {
    Ok(
        min_cover_with(g, CoverKind::Cointerval, &CoverOptions::default())?
            .0
            .len(),
    )
}

pub fn cothdim(g: &Graph) -> Result<usize> {
    Ok(
        min_cover_with(g, CoverKind::Threshold, &CoverOptions::default())?
            .0
            .len(),
    )
}

pub fn path_coboxicity(n: usize) -> Result<usize> {
    if n < 1 {
        return Err(Error::Precondition("a path needs at least one vertex"));
    }
    Ok((n - 1).div_ceil(3))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    /// Elements with an edge or vertex outside the host.
    pub not_subgraph: Vec<usize>,
    /// Elements failing the cover kind's recognition predicate.
    pub failed_recognition: Vec<usize>,
    pub uncovered: Vec<Edge>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.not_subgraph.is_empty()
            && self.failed_recognition.is_empty()
            && self.uncovered.is_empty()
    }

    pub fn summary(&self) -> String {
        use core::fmt::Write;
        if self.is_valid() {
            return String::from("valid");
        }
        let mut s = String::from("invalid");
        if !self.not_subgraph.is_empty() {
            let _ = write!(s, "; not subgraphs: {:?}", self.not_subgraph);
        }
        if !self.failed_recognition.is_empty() {
            let _ = write!(s, "; failed recognition: {:?}", self.failed_recognition);
        }
        if !self.uncovered.is_empty() {
            let _ = write!(s, "; uncovered edges: {:?}", self.uncovered);
        }
        s
    }
}

pub fn verify_cover(g: &Graph, c: &Cover) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut covered = BTreeSet::new();
    for (i, el) in c.elements.iter().enumerate() {
        if !el.subgraph.is_subgraph_of(g) {
            report.not_subgraph.push(i);
        }
        match el.subgraph.to_compact_graph() {
            Ok(h) if c.kind.accepts(&h) => {}
            _ => report.failed_recognition.push(i),
        }
        covered.extend(el.subgraph.edges.iter().copied());
    }
    report.uncovered = g.edges().filter(|e| !covered.contains(e)).collect();
    report
}

/// Indices of elements that are not a big ant over a block of `g`: the
/// element must carry its ant, the ant's clique must sit inside one block,
/// the element must contain the clique, and every element edge must lie in
/// the clique or touch an apex. Apex edges may be a subset of those in `g`
/// because elements are ants of a residual graph.
pub fn check_big_ant_structure(g: &Graph, c: &Cover) -> Vec<usize> {
    let bd = block_decomposition(g);
    let mut blocks_of: Vec<Vec<usize>> = alloc::vec![Vec::new(); g.id_bound()];
    for (i, b) in bd.blocks().iter().enumerate() {
        for &x in b {
            blocks_of[x as usize].push(i);
        }
    }
    let mut bad = Vec::new();
    for (i, el) in c.elements.iter().enumerate() {
        let ok = el.ant.as_ref().is_some_and(|ant| {
            let in_block = ant.block.first().is_some_and(|&x| {
                (x as usize) < blocks_of.len()
                    && blocks_of[x as usize].iter().any(|&k| {
                        ant.block
                            .iter()
                            .all(|y| bd.blocks()[k].binary_search(y).is_ok())
                    })
            });
            let apexes_in = [ant.u, ant.v]
                .iter()
                .all(|x| ant.block.binary_search(x).is_ok());
            let edges = el.subgraph.edge_set();
            let has_clique = ant.block.iter().enumerate().all(|(k, &a)| {
                ant.block[k + 1..]
                    .iter()
                    .all(|&b| edges.contains(&edge(a, b)))
            });
            let shaped = edges.iter().all(|&(a, b)| {
                (ant.block.binary_search(&a).is_ok() && ant.block.binary_search(&b).is_ok())
                    || [a, b].iter().any(|x| *x == ant.u || *x == ant.v)
            });
            in_block && apexes_in && has_clique && shaped && el.subgraph.is_subgraph_of(g)
        });
        if !ok {
            bad.push(i);
        }
    }
    bad
}

impl From<(BigAnt, &Graph)> for CoverElement {
    fn from((ant, g): (BigAnt, &Graph)) -> Self {
        let subgraph = ant.subgraph(g);
        CoverElement {
            ant: Some(ant),
            subgraph,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use alloc::vec;

    fn path(n: usize) -> Graph {
        let es: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
        build_graph(n, &es).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut es = Vec::new();
        for a in 0..n as Vertex {
            for b in a + 1..n as Vertex {
                es.push((a, b));
            }
        }
        build_graph(n, &es).unwrap()
    }

    #[test]
    fn paths_follow_formula() {
        for n in 2..30 {
            let g = path(n);
            let (cover, _) = min_cointerval_cover(&g).unwrap();
            assert_eq!(cover.len(), (n - 1).div_ceil(3), "P{n}");
            assert!(verify_cover(&g, &cover).is_valid());
        }
        assert_eq!(coboxicity(&path(7)).unwrap(), 2);
        assert_eq!(coboxicity(&path(4)).unwrap(), 1);
    }

    #[test]
    fn small_examples() {
        let (cover, traces) = min_cointerval_cover(&complete(5)).unwrap();
        assert_eq!(cover.len(), 1);
        assert_eq!(traces[0].step, Step::CliqueOrStar);
        assert_eq!(cover.elements[0].subgraph.edges.len(), 10);

        let two_k2 = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(coboxicity(&two_k2).unwrap(), 2);
        assert_eq!(coboxicity(&Graph::with_vertices(4)).unwrap(), 0);
        assert_eq!(cothdim(&Graph::with_vertices(4)).unwrap(), 0);

        let star = build_graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(cothdim(&star).unwrap(), 1);
        assert_eq!(cothdim(&path(4)).unwrap(), 2);
        assert_eq!(cothdim(&complete(6)).unwrap(), 1);
    }

    #[test]
    fn rejects_non_block_graphs() {
        let c4 = build_graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(coboxicity(&c4), Err(Error::NotBlockGraph));
        assert_eq!(cothdim(&c4), Err(Error::NotBlockGraph));
    }

    #[test]
    fn verification_reports() {
        let p4 = path(4);
        let (cover, _) = min_cointerval_cover(&p4).unwrap();
        assert!(verify_cover(&p4, &cover).is_valid());
        assert!(check_big_ant_structure(&p4, &cover).is_empty());

        let partial = Cover {
            kind: CoverKind::Cointerval,
            elements: vec![CoverElement {
                ant: None,
                subgraph: EdgeSubgraph::from_edges(vec![(0, 1), (1, 2)]),
            }],
        };
        let r = verify_cover(&p4, &partial);
        assert_eq!(r.uncovered, vec![(2, 3)]);
        assert!(!r.is_valid());

        let two_k2 = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        let whole = Cover {
            kind: CoverKind::Cointerval,
            elements: vec![CoverElement {
                ant: None,
                subgraph: EdgeSubgraph::from_edges(vec![(0, 1), (2, 3)]),
            }],
        };
        let r = verify_cover(&two_k2, &whole);
        assert_eq!(r.failed_recognition, vec![0]);
        assert!(r.uncovered.is_empty());

        let foreign = Cover {
            kind: CoverKind::Cointerval,
            elements: vec![CoverElement {
                ant: None,
                subgraph: EdgeSubgraph::from_edges(vec![(0, 2)]),
            }],
        };
        assert_eq!(verify_cover(&p4, &foreign).not_subgraph, vec![0]);
    }

    #[test]
    fn path_formula() {
        assert_eq!(path_coboxicity(1), Ok(0));
        assert_eq!(path_coboxicity(4), Ok(1));
        assert_eq!(path_coboxicity(10), Ok(3));
        assert!(path_coboxicity(0).is_err());
    }

    #[test]
    fn step_labels() {
        assert_eq!(Step::ThresholdNearLeafManyCuts.to_string(), "3*-many");
        assert_eq!(CoverKind::parse("threshold"), Some(CoverKind::Threshold));
        assert_eq!(CoverKind::parse("boxes"), None);
    }
}
