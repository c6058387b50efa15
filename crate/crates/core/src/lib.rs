//! Tree-independence number toolkit: exact oracles for tree-alpha,
//! tree-theta and treewidth on small graphs, recognizers for forbidden
//! induced patterns, constructive tree decompositions with certified
//! bounds, graph family generators, and exhaustive small-graph sweeps.

pub mod config;
pub mod decomposers;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod limits;
pub mod oracles;
pub mod patterns;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use limits::Limits;
pub use oracles::TreeDecomposition;
