//! Exact tools for Turán problems on expansions of forests in k-uniform
//! hypergraphs: covers and cross-cuts, forest builders, containment search,
//! kernel graphs, extremal constructions and an exact Turán number solver.

pub mod battery;
pub mod binomial;
pub mod constructions;
pub mod cover;
pub mod embed;
pub mod error;
pub mod forest;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod kernel;
pub mod search;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Forest, Graph};
pub use hypergraph::Hypergraph;
pub use vertex_set::VertexSet;
