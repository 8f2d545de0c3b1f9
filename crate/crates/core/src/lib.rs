//! Exact solvers for Eulerian edge deletion problems.
//!
//! The solvers run a dynamic program over edge-disjoint path systems between
//! terminal slots and prune every table cell to a representative family in
//! the co-graphic matroid of the input graph. A brute-force oracle and a
//! polynomial minimum T-join routine live in [`oracle`].

pub mod cli;
pub mod cographic;
pub mod dp;
pub mod error;
pub mod format;
pub mod gf2;
pub mod graph;
pub mod oracle;
pub mod problem;
pub mod repset;

pub use dp::{RepsetMode, SolveOutcome, SolveStats, SolverConfig};
pub use error::{Error, ParseError, Result};
pub use format::Instance;
pub use graph::{Digraph, EdgeSet, Graph};
pub use problem::Problem;
