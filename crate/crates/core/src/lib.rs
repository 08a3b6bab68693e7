//! Inertia sets of graphs.
//!
//! For a graph `G` on `n` vertices, `I(G)` is the set of partial inertias
//! `(π, ν)` of real symmetric matrices whose off-diagonal zero pattern is
//! exactly `G`. This crate computes `I(G)` exactly for forests, through
//! cut-vertex recursion for graphs built from known blocks, and builds
//! explicit rational matrices that realize each point.

pub mod elementary;
pub mod engine;
pub mod error;
pub mod golden;
pub mod graph;
pub mod lattice;
pub mod matrix;
pub mod params;

pub use error::{Error, Result};
pub use graph::{Graph, Subgraph, VertexSet};
pub use lattice::{Cap, LatticeSet, Partition, Stripe};
pub use params::SearchConfig;
