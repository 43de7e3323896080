use std::collections::HashMap;
use std::time::Instant;

use crate::decision_set::DecisionSet;
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::mass::Mass;
use crate::outcome::OutcomeSet;
use crate::tree::{DecisionTree, Node};

use super::{SolveResult, SolveStats};

pub const BRUTE_FORCE_MAX_N: usize = 20;

/// `cost(C)` and the left mask of the best split; `None` if `C` cannot be
/// resolved by any sequence of realizable questions.
type Memo<M> = HashMap<u64, Option<(M, u64)>>;

/// Minimum expected depth over all feasible trees.
///
/// Memoized recursion over candidate bitmasks:
/// `cost(C) = p(C) + min over realizable (A, B) of cost(A) + cost(B)` with
/// `cost({x}) = 0`. Fails when some pair of outcomes is never separated by
/// any question.
pub fn brute_force_optimal<M: Mass>(d: &Distribution<M>, family: &DecisionSet) -> Result<SolveResult<M>> {
    let n = d.len();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge { n, max: BRUTE_FORCE_MAX_N });
    }
    let start = Instant::now();
    let full = (1u64 << n) - 1;
    let mut memo: Memo<M> = HashMap::new();
    let mut explored = 0u64;
    if cost(full, d, family, &mut memo, &mut explored).is_none() {
        return Err(Error::Unsolvable(OutcomeSet::full(n).as_slice().to_vec()));
    }
    let tree = DecisionTree::new(build(full, &memo))?;
    let stats = SolveStats { nodes_explored: explored, wall_time: start.elapsed().as_secs_f64(), backtracks: 0 };
    SolveResult::new(tree, d, stats)
}

fn cost<M: Mass>(
    c: u64,
    d: &Distribution<M>,
    family: &DecisionSet,
    memo: &mut Memo<M>,
    explored: &mut u64,
) -> Option<M> {
    if c.count_ones() == 1 {
        return Some(M::zero());
    }
    if let Some(hit) = memo.get(&c) {
        return hit.map(|(v, _)| v);
    }
    *explored += 1;
    let mut best: Option<(M, u64)> = None;
    for left in family.split_masks(c) {
        let Some(a) = cost(left, d, family, memo, explored) else { continue };
        let Some(b) = cost(c & !left, d, family, memo, explored) else { continue };
        let total = a + b;
        if best.is_none_or(|(v, _)| total.approx_lt(v)) {
            best = Some((total, left));
        }
    }
    let mass = (0..64).filter(|i| c >> i & 1 == 1).fold(M::zero(), |acc, i| acc + d.p(i));
    let entry = best.map(|(v, left)| (v + mass, left));
    memo.insert(c, entry);
    entry.map(|(v, _)| v)
}

fn build<M: Mass>(c: u64, memo: &Memo<M>) -> Node {
    if c.count_ones() == 1 {
        return Node::leaf(c.trailing_zeros() as usize);
    }
    let (_, left) = memo[&c].expect("resolved set has a recorded split");
    Node::join(build(left, memo), build(c & !left, memo)).expect("split sides are disjoint")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::huffman_tree;
    use crate::mass::Exact;

    #[test]
    fn matches_huffman_when_unconstrained() {
        let d = Distribution::<Exact>::from_ratios(&[(8, 23), (6, 23), (4, 23), (2, 23), (2, 23), (1, 23)]).unwrap();
        let r = brute_force_optimal(&d, &DecisionSet::Unconstrained).unwrap();
        assert_eq!(r.expected_len, Exact::new(54, 23));
        assert_eq!(r.expected_len, huffman_tree(&d).expected_depth(&d).unwrap());
    }

    #[test]
    fn single_outcome() {
        let d = Distribution::new(vec![1.0]).unwrap();
        let r = brute_force_optimal(&d, &DecisionSet::Interval(1)).unwrap();
        assert_eq!(r.expected_len, 0.0);
    }

    #[test]
    fn wine_pairs_optimum_meets_huffman_bound() {
        // outcomes: 12 13 14 23 24 34
        let d: Distribution<Exact> = Distribution::parse("0.1\n0.1\n0.15\n0.15\n0.3\n0.2").unwrap();
        let fam = DecisionSet::WinePairs(4);
        let r = brute_force_optimal(&d, &fam).unwrap();
        assert!(r.tree.validate(&fam).is_feasible());
        // Hand-built feasible tree: taste bottle 2 -> {12,23,24} | {13,14,34};
        // then bottle 4 -> {24} | {12,23}, bottle 1 -> {12} | {23};
        // bottle 1 -> {13,14} | {34}, bottle 3 -> {13} | {14}.
        let j = |a, b| Node::join(a, b).unwrap();
        let l = j(Node::leaf(4), j(Node::leaf(0), Node::leaf(3)));
        let rt = j(j(Node::leaf(1), Node::leaf(2)), Node::leaf(5));
        let hand = DecisionTree::new(j(l, rt)).unwrap();
        assert!(hand.validate(&fam).is_feasible());
        assert_eq!(hand.expected_depth(&d).unwrap(), Exact::new(5, 2));
        // 2.5 is also the unconstrained lower bound, so it is the optimum.
        assert_eq!(r.expected_len, Exact::new(5, 2));
    }

    #[test]
    fn unsolvable_and_guard() {
        // only {0} can be separated; {1,2} is stuck
        let d = Distribution::<f64>::uniform(3).unwrap();
        let fam = DecisionSet::Explicit(vec![[0].into()]);
        assert!(matches!(brute_force_optimal(&d, &fam), Err(Error::Unsolvable(_))));
        let big = Distribution::<f64>::uniform(21).unwrap();
        assert!(matches!(brute_force_optimal(&big, &DecisionSet::Unconstrained), Err(Error::TooLarge { n: 21, .. })));
    }
}
