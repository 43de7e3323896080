//! Locating a single target position with range queries ("is the exon
//! inside positions `lo..=hi`?").
//!
//! Outcome `i` is position `i + 1`. After a few answers the candidate set is
//! generally not contiguous, so everything here works on the sorted member
//! list of the candidate set: a range query can only carve out a contiguous
//! run of those members.

pub mod experiment;

use serde::Serialize;

use crate::decision_set::{interval_blocks_completable, Split};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::mass::Mass;
use crate::outcome::OutcomeSet;
use crate::solvers::{gbsc_with, greedy_huffman_with, GreedyOptions, MergeRule, SolveResult};

/// The range `[lo, hi]` of 1-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalQuery {
    pub lo: usize,
    pub hi: usize,
}

impl IntervalQuery {
    pub fn new(lo: usize, hi: usize) -> Option<Self> {
        (1 <= lo && lo <= hi).then_some(IntervalQuery { lo, hi })
    }

    pub fn contains_outcome(&self, outcome: usize) -> bool {
        (self.lo..=self.hi).contains(&(outcome + 1))
    }

    /// `c ∩ [lo, hi]`.
    pub fn apply(&self, c: &OutcomeSet) -> OutcomeSet {
        c.iter().filter(|&x| self.contains_outcome(x)).collect()
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// No member of `other` lies between `set`'s extremes, i.e. `set` is a
/// contiguous run within `set ∪ other`.
fn is_run_among(set: &OutcomeSet, other: &OutcomeSet) -> bool {
    match (set.lowest(), set.highest()) {
        (Some(lo), Some(hi)) => !other.iter().any(|x| lo < x && x < hi),
        _ => false,
    }
}

/// Whether subtrees with candidates `a` and `b` may share a parent: some
/// range must pick out exactly one of them from `a ∪ b`.
///
/// That holds iff `a` or `b` is continuous relative to `a ∪ b` (no member
/// of the other falls between its extremes); two separated sets are the
/// special case where both are.
pub fn can_merge(a: &OutcomeSet, b: &OutcomeSet) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if !a.is_disjoint(b) {
        return Err(Error::Overlap);
    }
    Ok(is_run_among(a, b) || is_run_among(b, a))
}

/// Best range split of a candidate set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalSplit {
    /// Tightest range around `inside`.
    pub query: IntervalQuery,
    pub inside: OutcomeSet,
    pub outside: OutcomeSet,
}

/// The range query whose split of `c` is most balanced in probability.
///
/// Each range cuts out a contiguous run `c[i..=j]` of the sorted members, so
/// with prefix sums the best `j` for every start `i` is found by binary
/// search: `O(|c| log |c|)` per node instead of trying all `O(n²)` ranges.
/// Ties: smaller imbalance, then shorter range, then smaller `lo`.
pub fn interval_partition<M: Mass>(c: &OutcomeSet, d: &Distribution<M>) -> Result<IntervalSplit> {
    let members = c.as_slice();
    let m = members.len();
    if m < 2 {
        return Err(Error::Stuck(members.to_vec()));
    }
    let mut prefix = Vec::with_capacity(m + 1);
    prefix.push(M::zero());
    for &x in members {
        let last = *prefix.last().unwrap();
        prefix.push(last + d.p(x));
    }
    let total = prefix[m];
    // (imbalance, range length, lo, i, j)
    let mut best: Option<(M, usize, usize, usize, usize)> = None;
    let mut consider = |i: usize, j: usize| {
        if i == 0 && j == m - 1 {
            return;
        }
        let inside = prefix[j + 1] - prefix[i];
        let diff = (total - inside - inside).abs();
        let len = members[j] - members[i] + 1;
        let lo = members[i] + 1;
        let better = match best {
            None => true,
            Some((b, blen, blo, _, _)) => diff.approx_lt(b) || (diff.approx_eq(b) && (len, lo) < (blen, blo)),
        };
        if better {
            best = Some((diff, len, lo, i, j));
        }
    };
    for i in 0..m {
        // first j with 2 * mass(c[i..=j]) >= total; the optimum for this
        // start is there or one step before
        let target = prefix[i];
        let k = prefix[i + 1..].partition_point(|&p| {
            let inside = p - target;
            inside + inside < total
        });
        let j = i + k;
        if j < m {
            consider(i, j);
        }
        if j > i {
            consider(i, j - 1);
        }
    }
    let (_, _, _, i, j) = best.expect("a set with two members has a split");
    let inside: OutcomeSet = members[i..=j].iter().copied().collect();
    let outside = c.difference(&inside);
    Ok(IntervalSplit { query: IntervalQuery { lo: members[i] + 1, hi: members[j] + 1 }, inside, outside })
}

/// [`can_merge`] as a merge rule, with the range-query completability test.
#[derive(Debug, Clone, Copy, Default)]
pub struct IntervalMerge;

impl MergeRule for IntervalMerge {
    fn can_merge(&self, a: &OutcomeSet, b: &OutcomeSet) -> bool {
        can_merge(a, b).unwrap_or(false)
    }

    fn completable(&self, blocks: &[OutcomeSet]) -> bool {
        interval_blocks_completable(blocks)
    }
}

/// Greedy merging with [`can_merge`] as the mergeability test.
pub fn dna_greedy_huffman<M: Mass>(d: &Distribution<M>, opts: GreedyOptions) -> Result<SolveResult<M>> {
    greedy_huffman_with(d, &IntervalMerge, opts)
}

/// GBSC with [`interval_partition`]; the left child of every node is the
/// inside of its range.
pub fn dna_gbsc<M: Mass>(d: &Distribution<M>) -> Result<SolveResult<M>> {
    gbsc_with(d, |c| {
        let s = interval_partition(c, d)?;
        Ok(Split { left: s.inside, right: s.outside })
    })
}
