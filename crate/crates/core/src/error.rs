use alloc::string::String;

use crate::graph::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(Vertex),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("graph is not a block graph")]
    NotBlockGraph,
    #[error("ordering is not a permutation of the vertex set")]
    NotPermutation,
    #[error("vertex set is not a clique")]
    NotClique,
    #[error("apex {0} is not in the block")]
    ApexOutsideBlock(Vertex),
    #[error("graph is not co-interval")]
    NotCointerval,
    #[error("graph has {n} vertices, above the oracle bound of {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("set cover instance is infeasible")]
    Infeasible,
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
