//! Treewidth reduction for constrained separation problems.
//!
//! The crate computes, for a graph and a set of terminals, a replacement
//! graph of bounded treewidth that preserves every small minimal separator
//! between terminals. On top of it sit a tree-decomposition dynamic program
//! for hereditary-class-constrained cut problems and the bipartization
//! problems that reduce to them. Every solver has a brute-force twin in
//! [`oracle`] used for differential testing.
//!
//! Vertex ids are 0-based inside the library and 1-based in every file
//! format and in CLI output.

pub mod chain;
pub mod cli;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod problems;
pub mod reduction;
pub mod separation;
pub mod solver;
pub mod treedecomp;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
