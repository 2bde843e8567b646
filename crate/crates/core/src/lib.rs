//! Finite simple graphs and the combinatorics that decide whether the toric
//! ideal of a graph is generated by quadratic binomials.
//!
//! Vertices are 0-based throughout; vertex `k` here is vertex `k + 1` in the
//! usual 1-based notation for `[n]`. Edges are indexed by their position in
//! the lexicographically sorted edge list, and that index is the variable
//! index used by every downstream polynomial computation.

pub mod canon;
pub mod criterion;
pub mod cycles;
pub mod enumerate;
pub mod graph;
pub mod graph6;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use criterion::{CriterionError, CriterionReport};
pub use cycles::{Chord, ChordParity, ClosedWalk, Cycle, CycleError};
pub use enumerate::{enumerate_all, enumerate_connected, EnumerateError, GraphStream};
pub use graph::{EdgeIndexMap, Graph, GraphError, MAX_VERTICES};
pub use graph6::{graph6_decode, graph6_encode, Graph6Error};
