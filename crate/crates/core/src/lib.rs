//! Exact cops-and-robbers solving on small graphs, with isomorph-free
//! enumeration and an exhaustive survey harness built on top.

pub mod canon;
pub mod enumerate;
pub mod graph;
pub mod solver;
pub mod structure;
pub mod survey;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, Labeling};
pub use graph::{Girth, Graph, GraphError, VertexSet, MAX_ORDER};
pub use solver::{cop_number, k_cops_win, solve_k, GameState, SolveError, Turn, WinTable};
