//! Constrained tree construction: exact search, bottom-up greedy merging
//! with backtracking, and top-down balanced separation (GBSC).

mod brute;
mod gbsc;
mod greedy;
mod partition;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::distribution::Distribution;
use crate::error::Result;
use crate::mass::Mass;
use crate::tree::DecisionTree;

pub use brute::{brute_force_optimal, BRUTE_FORCE_MAX_N};
pub use gbsc::{gbsc, gbsc_with};
pub use greedy::{greedy_huffman, greedy_huffman_with, GreedyOptions, MergeRule, DEFAULT_MERGE_BUDGET};
pub use partition::{optimal_partition, UNCONSTRAINED_PARTITION_MAX};

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct SolveStats {
    pub nodes_explored: u64,
    /// Seconds.
    pub wall_time: f64,
    pub backtracks: u64,
}

#[derive(Debug, Clone)]
pub struct SolveResult<M = f64> {
    pub tree: DecisionTree,
    pub expected_len: M,
    pub stats: SolveStats,
}

impl<M: Mass> SolveResult<M> {
    pub(crate) fn new(tree: DecisionTree, d: &Distribution<M>, stats: SolveStats) -> Result<Self> {
        let expected_len = tree.expected_depth(d)?;
        Ok(SolveResult { tree, expected_len, stats })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serialization is infallible")
    }
}

impl<M: Mass> Serialize for SolveResult<M> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SolveResult", 3)?;
        st.serialize_field("expected_len", &self.expected_len.to_f64())?;
        st.serialize_field("stats", &self.stats)?;
        st.serialize_field("tree", &self.tree)?;
        st.end()
    }
}
