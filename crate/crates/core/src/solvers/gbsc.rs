use std::time::Instant;

use crate::decision_set::{DecisionSet, Split};
use crate::distribution::Distribution;
use crate::error::Result;
use crate::mass::Mass;
use crate::outcome::OutcomeSet;
use crate::tree::{DecisionTree, Node};

use super::partition::optimal_partition;
use super::{SolveResult, SolveStats};

/// Greedy binary separation: split every node by its most balanced
/// realizable partition, top-down, until only singletons remain.
pub fn gbsc<M: Mass>(d: &Distribution<M>, family: &DecisionSet) -> Result<SolveResult<M>> {
    gbsc_with(d, |c| optimal_partition(c, d, family))
}

/// GBSC with a caller-supplied partition search.
pub fn gbsc_with<M, F>(d: &Distribution<M>, mut partition: F) -> Result<SolveResult<M>>
where
    M: Mass,
    F: FnMut(&OutcomeSet) -> Result<Split>,
{
    let start = Instant::now();
    let mut calls = 0u64;
    let root = separate(OutcomeSet::full(d.len()), &mut partition, &mut calls)?;
    let stats = SolveStats { nodes_explored: calls, wall_time: start.elapsed().as_secs_f64(), backtracks: 0 };
    SolveResult::new(DecisionTree::new(root)?, d, stats)
}

fn separate<F>(c: OutcomeSet, partition: &mut F, calls: &mut u64) -> Result<Node>
where
    F: FnMut(&OutcomeSet) -> Result<Split>,
{
    if c.len() == 1 {
        return Ok(Node::leaf(c.as_slice()[0]));
    }
    *calls += 1;
    let Split { left, right } = partition(&c)?;
    let l = separate(left, partition, calls)?;
    let r = separate(right, partition, calls)?;
    Node::join(l, r)
}
