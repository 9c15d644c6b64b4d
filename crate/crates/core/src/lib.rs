//! Exact computation of monophonic and general position numbers and related
//! parameters on small graphs.

pub mod bitset;
pub mod clique;
pub mod families;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod matching;
pub mod paths;
pub mod position;
pub mod reduction;
pub mod split;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
