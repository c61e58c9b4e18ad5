//! Counting and enumeration of distance-2-clique-sets (D2CS).
//!
//! A D2CS of a graph G is a vertex set S with diam(G[S]) <= 2: every two
//! members are at distance at most two inside the induced subgraph. The
//! crate provides exact closed-form counters for structured families, a
//! general enumerator via cliques of the graph square, a maximal-D2CS
//! enumerator for strongly chordal graphs, and a brute-force oracle that
//! every other route is reconciled against.

pub mod catalog;
pub mod edgelist;
pub mod enum_all;
mod error;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod reconcile;
pub mod schordal;

pub use error::{Error, Result};
pub use formulas::BigCount;
pub use generators::FamilySpec;
pub use graph::{Distance, Graph, VertexSet};
