//! Isometric embeddings of graphs into integer lattices under the L1 metric.
//!
//! Not every graph fits inside a lattice: a graph embeds isometrically into
//! some `Z^d` exactly when it embeds isometrically into a hypercube, i.e.
//! when it is a *partial cube*. For those graphs there is a well-defined
//! minimum dimension, and this crate computes it together with explicit
//! integer coordinates. The pipeline:
//!
//! 1. recognize the input as a partial cube and label every vertex with a
//!    `tau`-bit hypercube address ([`recognize`]),
//! 2. materialize the `2*tau` semicubes and the semicube graph, whose edges
//!    join pairs of semicubes that cover all vertices while overlapping
//!    ([`semicubes`], [`build_semicube_graph`]),
//! 3. find a maximum matching in the semicube graph ([`maximum_matching`]);
//!    the minimum dimension is `tau - |M|`,
//! 4. decompose matched semicubes into paths and read a coordinate per path
//!    ([`path_decomposition`], [`coordinates`]).
//!
//! [`embed`] runs the whole pipeline and checks the result against the
//! graph's distance matrix before returning it.
//!
//! ```
//! let (g, _) = latdim::Graph::parse_edge_list("0 1\n1 2\n").unwrap();
//! let emb = latdim::embed(&g).unwrap();
//! assert_eq!(emb.dim(), 1); // a path is a line segment
//! ```

#![forbid(unsafe_code)]

pub mod bitset;
pub mod cube;
pub mod embed;
mod error;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod pipeline;
pub mod semicube;

pub use bitset::Bitset;
pub use cube::{labeling_from_classes, recognize, theta_classes, verify_labeling};
pub use cube::{HypercubeLabeling, ThetaClasses};
pub use embed::{
    coordinates, hypercube_from_embedding, matching_from_embedding, path_decomposition,
    verify_decomposition, verify_isometry, LatticeEmbedding, PathDecomposition,
};
pub use error::Error;
pub use graph::{all_pairs_distances, DistanceMatrix, Graph, ParseWarning};
pub use matching::{brute_force_matching_size, maximum_matching, verify_matching, Matching};
pub use pipeline::{embed, run_pipeline, PipelineOutput, StageTimings};
pub use semicube::{build_semicube_graph, export_dot, semicubes, SemicubeFamily, SemicubeGraph};
