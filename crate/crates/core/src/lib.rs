//! Reconstruction of metric graphs from discrete data sampled around
//! filamentary structures.
//!
//! The pipeline builds a neighborhood graph over the sample, computes the
//! graph distance to a root vertex, covers its range with overlapping
//! intervals, clusters each interval's preimage into connected components
//! (the Mapper nerve of the cover) and glues interval copies along the nerve
//! into a metric graph whose node heights are distances to the root.
//!
//! Alongside the pipeline the crate ships distortion evaluation with the
//! matching closed-form approximation bounds, a persistence-based estimator
//! for the first Betti number of the underlying graph, ingestion for point,
//! edge-list and trace files, and seeded synthetic datasets.

pub mod betti;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod graph;
pub mod reeb;
pub mod synth;

pub use error::{Error, Result};
pub use geometry::{
    build_rips_graph, delay_embed, density_filter, farthest_point_net, resample_trace,
    stack_traces, PointCloud, Trace,
};
pub use graph::{
    connected_components, sssp, MetricEdge, MetricGraph, MetricNode, NeighborGraph, ScalarField,
    UnionFind,
};
pub use reeb::{
    alpha_reeb, alpha_reeb_with, build_cover, embed_graph, glue_intervals, mapper_nerve, simplify,
    AlphaReebOptions, AlphaReebOutput, ClusterGraph, IntervalCover,
};
