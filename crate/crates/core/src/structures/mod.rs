//! Core combinatorial value types and their file formats.
//!
//! All structures index their elements densely from zero. Files use 1-based
//! indices; the parsers in [`format`] convert.

mod digraph;
pub mod format;
mod graph;
mod isomorphism;
mod lattice;
mod poset;

pub use digraph::{Arc, ColoredDigraph, DigraphError};
pub use format::{parse, parse_graph, serialize, Format, FormatError, FormatErrorKind, TextFormat};
pub use graph::{permutations, GraphError, UndirectedGraph};
pub use isomorphism::Isomorphism;
pub use lattice::{FiniteLattice, LatticeError};
pub use poset::{FinitePoset, PosetError};

/// Validate a square boolean order table.
pub fn validate_poset(leq: &[Vec<bool>]) -> Result<FinitePoset, PosetError> {
    FinitePoset::from_table(leq)
}
