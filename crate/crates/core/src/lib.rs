//! Exact solver for deleting at most `d` rows of a binary matrix so that the
//! remainder has the consecutive ones property.
//!
//! The solver branches on three kinds of local obstructions and hands the
//! remaining instance to an exact interval vertex deletion solver on the
//! derived graph of the matrix with an identity block on top. Brute-force
//! oracles for every step live in [`oracle`].

pub mod cli;
pub mod cop;
pub mod error;
pub mod graph;
pub mod interval;
pub mod matrix;
pub mod oracle;
pub mod sets;
pub mod solver;

pub use cop::{
    cop_order, interval_assignment, is_icpia, verify_cop, ColumnPermutation, IntervalAssignment,
};
pub use error::{Error, Result};
pub use graph::{
    derived_graph, find_c4, find_helly_violation, find_uncovered_clique, is_chordal, is_simplicial,
    maximal_cliques_chordal, pair_subgraph, parse_graph, vert, Graph, HellyKind, HellyViolation,
    UncoveredClique,
};
pub use interval::{interval_deletion, is_interval, minimalize_solution, IntervalDeletion};
pub use matrix::{
    augment, delete_rows, parse_matrix, set_system, support, BinaryMatrix, SetSystem,
};
pub use sets::{CliqueSet, RowSet, VertexSet};
pub use solver::{
    convex_bipartite_deletion, cos_r, half_adjacency, parse_bipartite, BipartiteGraph, CosrSolver,
    SolveReport, SolveStats,
};
