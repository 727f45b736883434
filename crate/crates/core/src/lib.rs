//! Maximum k-defective clique search.
//!
//! A k-defective clique is a vertex set missing at most `k` edges. The solver
//! runs a branch-and-bound search over degeneracy-ordered ego networks, with
//! reduction rules and a degree-sequence bound for pruning.

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod instance;
pub mod io;
pub mod oracle;
pub mod ordering;
pub mod rules;
pub mod solution;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use instance::Instance;
pub use ordering::DegeneracyOrdering;
pub use solution::Solution;
pub use solver::{solve, Mode, SearchStats, SolveOutcome, SolverConfig};
