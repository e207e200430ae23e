//! Isomorphism-preserving reductions between classification problems.
//!
//! * [`groups`]: finite groups as Cayley tables, a test catalog and
//!   generator-based isomorphism search.
//! * [`reductions`]: the colored digraph Γ(G) of a group and its inverse,
//!   incidence and extended incidence digraphs of graphs, reachability
//!   orders, and conversion between posets and lattices.
//! * [`lattice`]: distributivity and modularity checks, M3/N5 sublattice
//!   search, a Birkhoff cross-check and a small-lattice enumerator.
//! * [`iso`]: color refinement plus individualization backtracking for
//!   colored digraphs, with adapters for graphs, posets and lattices.
//! * [`matrix`]: matrices over prime fields, simultaneous similarity of
//!   matrix pairs, trace-word invariants, non-commutative polynomial
//!   templates and skew-symmetric congruence.
//! * [`cli`]: the `wildclass` command line and the verification pipelines.

pub mod cli;
pub mod groups;
pub mod iso;
pub mod lattice;
pub mod matrix;
pub mod reductions;
pub mod structures;

pub use groups::{FiniteGroup, GroupError};
pub use structures::{ColoredDigraph, FiniteLattice, FinitePoset, Isomorphism, UndirectedGraph};
