use std::cmp::Ordering;
use std::collections::HashSet;
use std::time::Instant;

use crate::codes::key_cmp;
use crate::decision_set::DecisionSet;
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::mass::Mass;
use crate::outcome::OutcomeSet;
use crate::tree::{DecisionTree, Node};

use super::{SolveResult, SolveStats};

pub const DEFAULT_MERGE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy)]
pub struct GreedyOptions {
    /// Maximum number of merges attempted before giving up with
    /// [`Error::BudgetExhausted`].
    pub budget: u64,
}

impl Default for GreedyOptions {
    fn default() -> Self {
        GreedyOptions { budget: DEFAULT_MERGE_BUDGET }
    }
}

/// Decides which subtrees may share a parent.
pub trait MergeRule {
    /// Whether some question separates `a` from `b` within `a ∪ b`.
    fn can_merge(&self, a: &OutcomeSet, b: &OutcomeSet) -> bool;

    /// Whether subtrees with these candidate sets can still be merged into
    /// one feasible tree. Must never return `false` for a partition that
    /// has a completion; the default assumes every partition might.
    fn completable(&self, _blocks: &[OutcomeSet]) -> bool {
        true
    }
}

impl<F: Fn(&OutcomeSet, &OutcomeSet) -> bool> MergeRule for F {
    fn can_merge(&self, a: &OutcomeSet, b: &OutcomeSet) -> bool {
        self(a, b)
    }
}

impl MergeRule for DecisionSet {
    fn can_merge(&self, a: &OutcomeSet, b: &OutcomeSet) -> bool {
        self.realizes(&a.union(b), a)
    }

    fn completable(&self, blocks: &[OutcomeSet]) -> bool {
        match self {
            DecisionSet::Interval(_) => crate::decision_set::interval_blocks_completable(blocks),
            _ => true,
        }
    }
}

/// Bottom-up greedy merge with backtracking, using `family` to decide
/// whether two subtrees may share a parent.
pub fn greedy_huffman<M: Mass>(d: &Distribution<M>, family: &DecisionSet) -> Result<SolveResult<M>> {
    greedy_huffman_with(d, family, GreedyOptions::default())
}

struct Entry<M> {
    set: OutcomeSet,
    mass: M,
    children: Option<(usize, usize)>,
}

struct Search<'a, M, R: ?Sized> {
    arena: Vec<Entry<M>>,
    rule: &'a R,
    merges: u64,
    backtracks: u64,
    budget: u64,
    /// Partitions already shown to have no completion. Success depends only
    /// on the partition, not on how it was reached, so skipping these leaves
    /// the search order and its first result unchanged.
    dead: HashSet<Vec<OutcomeSet>>,
}

/// Greedy merge with a caller-supplied [`MergeRule`].
///
/// At every level all pairs of current subtrees are tried in ascending order
/// of combined mass (ties: lowest outcome of the first subtree, then of the
/// second). The first mergeable pair is merged and the search recurses; if
/// the recursion dead-ends, the next pair is tried. Returns the first
/// complete tree found.
///
/// Partitions the rule reports as not completable, and partitions already
/// seen to fail, are skipped without recursing. Both would return nothing
/// anyway, so the result is the same as the plain backtracking search.
pub fn greedy_huffman_with<M, R>(d: &Distribution<M>, rule: &R, opts: GreedyOptions) -> Result<SolveResult<M>>
where
    M: Mass,
    R: MergeRule + ?Sized,
{
    let start = Instant::now();
    let mut search = Search {
        arena: d
            .probs()
            .iter()
            .enumerate()
            .map(|(i, &p)| Entry { set: OutcomeSet::singleton(i), mass: p, children: None })
            .collect(),
        rule,
        merges: 0,
        backtracks: 0,
        budget: opts.budget,
        dead: HashSet::new(),
    };
    let active: Vec<usize> = (0..d.len()).collect();
    let root = search.run(&active)?.ok_or(Error::NoFeasibleMergeSequence)?;
    let tree = DecisionTree::new(search.build(root))?;
    let stats = SolveStats {
        nodes_explored: search.merges,
        wall_time: start.elapsed().as_secs_f64(),
        backtracks: search.backtracks,
    };
    SolveResult::new(tree, d, stats)
}

impl<M: Mass, R: MergeRule + ?Sized> Search<'_, M, R> {
    fn run(&mut self, active: &[usize]) -> Result<Option<usize>> {
        if active.len() == 1 {
            return Ok(Some(active[0]));
        }
        for (a, b) in self.ordered_pairs(active) {
            if !self.rule.can_merge(&self.arena[a].set, &self.arena[b].set) {
                continue;
            }
            if self.merges >= self.budget {
                return Err(Error::BudgetExhausted { explored: self.merges });
            }
            self.merges += 1;
            let mark = self.arena.len();
            let (left, right) = self.orient(a, b);
            self.arena.push(Entry {
                set: self.arena[a].set.union(&self.arena[b].set),
                mass: self.arena[a].mass + self.arena[b].mass,
                children: Some((left, right)),
            });
            let next: Vec<usize> =
                active.iter().copied().filter(|&x| x != a && x != b).chain(std::iter::once(mark)).collect();
            let state = self.partition(&next);
            if !self.dead.contains(&state) {
                if self.rule.completable(&state) {
                    if let Some(root) = self.run(&next)? {
                        return Ok(Some(root));
                    }
                }
                self.dead.insert(state);
            }
            self.backtracks += 1;
            self.arena.truncate(mark);
        }
        Ok(None)
    }

    fn partition(&self, active: &[usize]) -> Vec<OutcomeSet> {
        let mut blocks: Vec<OutcomeSet> = active.iter().map(|&x| self.arena[x].set.clone()).collect();
        blocks.sort_unstable();
        blocks
    }

    fn key(&self, x: usize) -> (M, usize) {
        (self.arena[x].mass, self.arena[x].set.lowest().unwrap_or(usize::MAX))
    }

    /// Left child is the subtree with the smaller `(mass, lowest outcome)`.
    fn orient(&self, a: usize, b: usize) -> (usize, usize) {
        if key_cmp(self.key(a), self.key(b)) == Ordering::Greater {
            (b, a)
        } else {
            (a, b)
        }
    }

    fn ordered_pairs(&self, active: &[usize]) -> Vec<(usize, usize)> {
        let min = |x: usize| self.arena[x].set.lowest().unwrap_or(usize::MAX);
        let mut pairs: Vec<(M, usize, usize, usize, usize)> = Vec::with_capacity(active.len() * (active.len() - 1) / 2);
        for (i, &x) in active.iter().enumerate() {
            for &y in &active[i + 1..] {
                let (first, second) = if min(x) <= min(y) { (x, y) } else { (y, x) };
                let sum = self.arena[x].mass + self.arena[y].mass;
                pairs.push((sum, min(first), min(second), first, second));
            }
        }
        pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap_or(Ordering::Equal).then((p.1, p.2).cmp(&(q.1, q.2))));
        // Sums within tolerance of each other are ties: order those runs by
        // outcome index alone.
        let mut start = 0;
        while start < pairs.len() {
            let mut end = start + 1;
            while end < pairs.len() && pairs[end].0.approx_eq(pairs[start].0) {
                end += 1;
            }
            pairs[start..end].sort_by_key(|p| (p.1, p.2));
            start = end;
        }
        pairs.into_iter().map(|p| (p.3, p.4)).collect()
    }

    fn build(&self, x: usize) -> Node {
        match self.arena[x].children {
            None => Node::leaf(self.arena[x].set.lowest().expect("leaf has one outcome")),
            Some((l, r)) => Node::join(self.build(l), self.build(r)).expect("merged subtrees are disjoint"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::huffman_tree;
    use crate::mass::Exact;

    #[test]
    fn unconstrained_reduces_to_huffman() {
        for probs in [vec![0.1, 0.2, 0.3, 0.4], vec![0.1, 0.1, 0.15, 0.15, 0.3, 0.2], vec![1.0]] {
            let d = Distribution::new(probs).unwrap();
            let g = greedy_huffman(&d, &DecisionSet::Unconstrained).unwrap();
            let h = huffman_tree(&d).expected_depth(&d).unwrap();
            assert!((g.expected_len - h).abs() < 1e-12);
            assert_eq!(g.stats.backtracks, 0);
        }
    }

    #[test]
    fn wine_pairs_needs_feasible_merges() {
        let d: Distribution<Exact> = Distribution::parse("0.1\n0.1\n0.15\n0.15\n0.3\n0.2").unwrap();
        let fam = DecisionSet::WinePairs(4);
        match greedy_huffman(&d, &fam) {
            Ok(r) => {
                assert!(r.tree.validate(&fam).is_feasible());
                assert!(r.expected_len >= Exact::new(5, 2));
            }
            Err(e) => assert!(e.is_infeasible(), "{e}"),
        }
    }

    #[test]
    fn exhausted_search_and_budget() {
        let d = Distribution::<f64>::uniform(3).unwrap();
        let never = |_: &OutcomeSet, _: &OutcomeSet| false;
        assert!(matches!(
            greedy_huffman_with(&d, &never, GreedyOptions::default()),
            Err(Error::NoFeasibleMergeSequence)
        ));
        let always = |_: &OutcomeSet, _: &OutcomeSet| true;
        assert!(matches!(
            greedy_huffman_with(&d, &always, GreedyOptions { budget: 1 }),
            Err(Error::BudgetExhausted { explored: 1 })
        ));
    }

    #[test]
    fn backtracks_out_of_dead_ends() {
        // {0,1} may merge first but then nothing else can join; the search
        // must undo it and find {1,2} then {0,{1,2}}.
        let d = Distribution::new(vec![0.2, 0.2, 0.6]).unwrap();
        let ok = |a: &OutcomeSet, b: &OutcomeSet| {
            let u = a.union(b);
            u.as_slice() == [0, 1]
                || u.as_slice() == [1, 2]
                || u.len() == 3 && (a.len() == 1 && a.contains(0) || b.len() == 1 && b.contains(0))
        };
        let r = greedy_huffman_with(&d, &ok, GreedyOptions::default()).unwrap();
        assert_eq!(r.stats.backtracks, 1);
        assert_eq!(r.tree.leaf_depths(), vec![(0, 1), (1, 2), (2, 2)]);
    }
}
