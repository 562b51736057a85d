//! Exact maximum k-plex solver.
//!
//! A k-plex is a vertex set in which every member is adjacent to all but at
//! most k-1 of the others. This crate finds a maximum k-plex of size at
//! least 2k-1 with a branch-reduce-and-bound search: a greedy heuristic
//! seeds a lower bound, core/truss co-pruning shrinks the graph, and the
//! search splits on per-vertex two-hop subgraphs with an alternated
//! partition-based reduction and bound at every branch.

pub mod altrb;
pub mod bitset;
pub mod bounds;
pub mod ctcp;
pub mod graph;
pub mod heuristic;
pub mod io;
pub mod oracle;
pub mod search;

pub use bitset::VertexSet;
pub use graph::{BitGraph, Graph};
pub use search::{solve, solve_with_hook, Mode, Solution, SolverConfig, Status};
