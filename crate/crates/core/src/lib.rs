//! Binary decision trees for identifying a random outcome when only a fixed
//! family of yes/no questions may be asked.
//!
//! * [`codes`]: entropy and the unconstrained baselines (Huffman, Shannon).
//! * [`solvers`]: exact search, greedy merging and GBSC for any
//!   [`DecisionSet`].
//! * [`dna`]: the range-query specialization.
//! * [`battleship`]: single-player Battleship solved by picking the cell
//!   whose hit probability is closest to one half.
//! * [`harness`]: the commands behind the `querytree` binary; [`plot`]
//!   renders their SVG charts.

pub mod battleship;
pub mod codes;
pub mod decision_set;
pub mod distribution;
pub mod dna;
pub mod error;
pub mod harness;
pub mod mass;
pub mod outcome;
pub mod plot;
pub mod sampling;
pub mod solvers;
pub mod tree;

pub use codes::{entropy, huffman_tree, shannon_length};
pub use decision_set::{DecisionSet, Split};
pub use distribution::Distribution;
pub use error::{Error, Result};
pub use mass::{Exact, Mass};
pub use outcome::OutcomeSet;
pub use solvers::{brute_force_optimal, gbsc, greedy_huffman, optimal_partition, SolveResult, SolveStats};
pub use tree::{DecisionTree, Node, ValidationReport};
