//! Minimum co-interval covers and threshold covers of block graphs.
//!
//! The co-boxicity of a graph is the least number of co-interval subgraphs
//! whose edge sets cover it; the threshold co-dimension is the same with
//! threshold subgraphs. Both are computed exactly for block graphs (graphs
//! whose 2-connected pieces are cliques) by [`cover::min_cointerval_cover`]
//! and [`cover::min_threshold_cover`]. The [`oracle`] module brute-forces the
//! same numbers on small graphs.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod blocks;
pub mod cointerval;
pub mod cover;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;

pub use blocks::{block_decomposition, is_block_graph, BlockDecomposition};
pub use cointerval::{big_ant, is_cointerval, is_threshold, sigma_subgraph, BigAnt, VertexOrder};
pub use cover::{
    coboxicity, cothdim, cover_to_box_representation, min_cointerval_cover, min_threshold_cover,
    verify_cover, Cover, CoverKind,
};
pub use error::{Error, Result};
pub use graph::{build_graph, Edge, EdgeSubgraph, Graph, Vertex, VertexSet};
