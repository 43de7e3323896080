//! Query families: which yes/no questions may be asked about the outcome.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::outcome::OutcomeSet;

/// Largest alphabet for which [`DecisionSet::is_decision_complete`] runs.
pub const COMPLETENESS_MAX_N: usize = 24;

/// A family of query sets over the alphabet `0..n`.
///
/// Asking "is X in S?" and "is X outside S?" are the same question, so a
/// split of a candidate set is realizable when either side equals `C ∩ S`
/// for some member `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionSet {
    /// Every subset may be asked.
    Unconstrained,
    /// Contiguous ranges of positions; outcome `i` is position `i + 1`.
    Interval(usize),
    /// `k` bottles, exactly two bad. Outcomes are the pairs `{i, j}` in
    /// lexicographic order; tasting a mix of bottles `T` answers whether the
    /// bad pair meets `T`.
    WinePairs(usize),
    Explicit(Vec<OutcomeSet>),
}

/// A bipartition of a candidate set. `left` is the side the question
/// answers "yes" for; enumeration orients it to hold the smallest member.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Split {
    pub left: OutcomeSet,
    pub right: OutcomeSet,
}

impl Split {
    /// Orients an unordered bipartition so that `left` contains the
    /// smallest member.
    pub fn oriented(a: OutcomeSet, b: OutcomeSet) -> Self {
        if a.lowest() < b.lowest() {
            Split { left: a, right: b }
        } else {
            Split { left: b, right: a }
        }
    }
}

impl DecisionSet {
    /// Size of the alphabet the family is defined on, when intrinsic.
    pub fn alphabet_size(&self) -> Option<usize> {
        match self {
            DecisionSet::Unconstrained | DecisionSet::Explicit(_) => None,
            DecisionSet::Interval(n) => Some(*n),
            DecisionSet::WinePairs(k) => Some(k * k.saturating_sub(1) / 2),
        }
    }

    /// The `(i, j)` bottle pair (0-based, `i < j`) behind each wine outcome.
    pub fn wine_pairs(k: usize) -> Vec<(usize, usize)> {
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
    }

    /// Query masks `S_T` for every nonempty proper bottle subset `T`.
    fn wine_queries(k: usize) -> Vec<u64> {
        let pairs = Self::wine_pairs(k);
        (1u64..(1 << k) - 1)
            .map(|t| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(_, &(i, j))| t >> i & 1 == 1 || t >> j & 1 == 1)
                    .fold(0u64, |m, (idx, _)| m | 1 << idx)
            })
            .collect()
    }

    /// Whether splitting `candidates` into `side` and `candidates ∖ side`
    /// can be done with one question from this family.
    pub fn realizes(&self, candidates: &OutcomeSet, side: &OutcomeSet) -> bool {
        if side.is_empty() || side.len() >= candidates.len() || !side.is_subset(candidates) {
            return false;
        }
        match self {
            DecisionSet::Unconstrained => true,
            DecisionSet::Interval(_) => {
                let other = candidates.difference(side);
                is_run_of(candidates, side) || is_run_of(candidates, &other)
            }
            DecisionSet::WinePairs(k) => match (candidates.to_mask(), side.to_mask()) {
                (Some(c), Some(s)) => Self::wine_queries(*k).into_iter().any(|q| c & q == s || c & !q == s),
                _ => false,
            },
            DecisionSet::Explicit(sets) => {
                let other = candidates.difference(side);
                sets.iter().any(|s| {
                    let hit = candidates.intersection(s);
                    hit == *side || hit == other
                })
            }
        }
    }

    /// Every distinct realizable split of `candidates`, each yielded once,
    /// oriented per [`Split::oriented`], in ascending order of `left`.
    ///
    /// `Unconstrained` yields `2^(m-1) - 1` splits; callers bound `m`.
    pub fn splits(&self, candidates: &OutcomeSet) -> Result<Vec<Split>> {
        if candidates.len() < 2 {
            return Ok(Vec::new());
        }
        if let DecisionSet::Interval(_) = self {
            let members = candidates.as_slice();
            let m = members.len();
            let mut out = BTreeSet::new();
            for i in 0..m {
                for j in i..m {
                    if i == 0 && j == m - 1 {
                        continue;
                    }
                    let run: OutcomeSet = members[i..=j].iter().copied().collect();
                    let rest = candidates.difference(&run);
                    out.insert(Split::oriented(run, rest));
                }
            }
            return Ok(out.into_iter().collect());
        }
        let c =
            candidates.to_mask().ok_or(Error::TooLarge { n: candidates.highest().map_or(0, |x| x + 1), max: 64 })?;
        Ok(self
            .split_masks(c)
            .into_iter()
            .map(|left| Split { left: OutcomeSet::from_mask(left), right: OutcomeSet::from_mask(c & !left) })
            .collect())
    }

    /// Bitmask form of [`splits`](Self::splits): the `left` masks, each
    /// containing the lowest set bit of `c`, ascending and duplicate-free.
    pub fn split_masks(&self, c: u64) -> Vec<u64> {
        if c.count_ones() < 2 {
            return Vec::new();
        }
        let low = c & c.wrapping_neg();
        let mut out = match self {
            DecisionSet::Unconstrained => {
                // submasks of the remaining bits, excluding "all of them"
                let rest = c & !low;
                let mut v = Vec::new();
                let mut sub = rest;
                loop {
                    if sub != rest {
                        v.push(low | sub);
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
                v
            }
            DecisionSet::Interval(_) => {
                let members: Vec<u32> = (0..64).filter(|&b| c >> b & 1 == 1).collect();
                let m = members.len();
                let mut v = Vec::with_capacity(m * (m + 1) / 2);
                for i in 0..m {
                    let mut run = 0u64;
                    for (j, &b) in members.iter().enumerate().skip(i) {
                        run |= 1 << b;
                        if i == 0 && j == m - 1 {
                            continue;
                        }
                        v.push(if run & low != 0 { run } else { c & !run });
                    }
                }
                v
            }
            DecisionSet::WinePairs(k) => Self::wine_queries(*k)
                .into_iter()
                .map(|q| c & q)
                .filter(|&s| s != 0 && s != c)
                .map(|s| if s & low != 0 { s } else { c & !s })
                .collect(),
            DecisionSet::Explicit(sets) => sets
                .iter()
                .filter_map(|s| s.iter().filter(|&i| i < 64).try_fold(0u64, |m, i| Some(m | 1 << i)))
                .map(|q| c & q)
                .filter(|&s| s != 0 && s != c)
                .map(|s| if s & low != 0 { s } else { c & !s })
                .collect(),
        };
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of distinct bipartitions of the full alphabet `0..n` that
    /// one question can realize.
    pub fn realizable_bipartitions(&self, n: usize) -> Result<usize> {
        if n > 63 {
            return Err(Error::TooLarge { n, max: 63 });
        }
        Ok(self.split_masks((1u64 << n) - 1).len())
    }

    /// True iff every nonempty proper subset of `0..n`, or its complement,
    /// can be asked directly.
    pub fn is_decision_complete(&self, n: usize) -> Result<bool> {
        if n > COMPLETENESS_MAX_N {
            return Err(Error::TooLarge { n, max: COMPLETENESS_MAX_N });
        }
        if n < 2 {
            return Ok(true);
        }
        if let DecisionSet::Unconstrained = self {
            return Ok(true);
        }
        // Necessary condition: at least 2^(n-1) - 1 distinct bipartitions.
        // Since realizable bipartitions are counted without duplicates, the
        // count reaching that bound is also sufficient.
        let needed = (1usize << (n - 1)) - 1;
        Ok(self.realizable_bipartitions(n)? >= needed)
    }
}

/// Whether subtrees with candidate sets `blocks` (a partition of their
/// union) can be joined into one tree using range questions only.
///
/// Restricting a feasible tree to a subset of its outcomes keeps it feasible,
/// and following the contiguous side of every split down from the root of a
/// completion always ends at a block that is contiguous in the whole union.
/// So a completion exists iff blocks that are contiguous among the remaining
/// members can be peeled off one at a time until a single block is left.
pub fn interval_blocks_completable(blocks: &[OutcomeSet]) -> bool {
    // (position, block id) for every member, sorted by position
    let mut seq: Vec<(usize, usize)> =
        blocks.iter().enumerate().flat_map(|(b, set)| set.iter().map(move |x| (x, b))).collect();
    seq.sort_unstable();
    let mut remaining = blocks.iter().filter(|b| !b.is_empty()).count();
    while remaining > 1 {
        // a block is contiguous iff its members form one unbroken stretch
        let mut stretches = vec![0usize; blocks.len()];
        let mut prev = None;
        for &(_, b) in &seq {
            if prev != Some(b) {
                stretches[b] += 1;
            }
            prev = Some(b);
        }
        let Some(peel) = (0..blocks.len()).find(|&b| stretches[b] == 1) else {
            return false;
        };
        seq.retain(|&(_, b)| b != peel);
        remaining -= 1;
    }
    true
}

/// `side` is a contiguous run of the sorted members of `candidates`.
fn is_run_of(candidates: &OutcomeSet, side: &OutcomeSet) -> bool {
    let (Some(lo), Some(hi)) = (side.lowest(), side.highest()) else {
        return false;
    };
    let inside = candidates.iter().filter(|&x| lo <= x && x <= hi).count();
    inside == side.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_complete(a: &DecisionSet, n: usize) -> bool {
        let full = OutcomeSet::full(n);
        (1u64..(1 << n) - 1).all(|s| a.realizes(&full, &OutcomeSet::from_mask(s)))
    }

    #[test]
    fn unconstrained_is_complete() {
        assert!(DecisionSet::Unconstrained.is_decision_complete(6).unwrap());
        assert_eq!(DecisionSet::Unconstrained.realizable_bipartitions(6).unwrap(), 31);
    }

    #[test]
    fn wine_pairs_four_bottles_is_not_complete() {
        let a = DecisionSet::WinePairs(4);
        assert_eq!(a.alphabet_size(), Some(6));
        assert!(!a.is_decision_complete(6).unwrap());
        assert!(!brute_complete(&a, 6));
        // at most 2^4 - 2 proper tastings, well under the 31 needed
        assert!(a.realizable_bipartitions(6).unwrap() < 31);
    }

    #[test]
    fn interval_completeness_matches_enumeration() {
        // Interval(3): every subset of {1,2,3} or its complement is a range.
        assert!(brute_complete(&DecisionSet::Interval(3), 3));
        assert!(DecisionSet::Interval(3).is_decision_complete(3).unwrap());
        // Interval(4): {1,3} vs {2,4} is not askable.
        assert!(!brute_complete(&DecisionSet::Interval(4), 4));
        assert!(!DecisionSet::Interval(4).is_decision_complete(4).unwrap());
        for n in 1..=8 {
            let a = DecisionSet::Interval(n);
            assert_eq!(a.is_decision_complete(n).unwrap(), n < 2 || brute_complete(&a, n), "n={n}");
        }
    }

    #[test]
    fn completeness_guard() {
        assert!(matches!(DecisionSet::Interval(30).is_decision_complete(30), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn split_enumeration_is_deduplicated_and_realizable() {
        for a in [
            DecisionSet::Unconstrained,
            DecisionSet::Interval(6),
            DecisionSet::WinePairs(4),
            DecisionSet::Explicit(vec![[0, 1].into(), [2, 3, 4].into(), [0, 1].into()]),
        ] {
            for c in [0b111111u64, 0b101101, 0b110, 0b1] {
                let cs = OutcomeSet::from_mask(c);
                let splits = a.splits(&cs).unwrap();
                let masks = a.split_masks(c);
                assert_eq!(splits.len(), masks.len());
                let uniq: BTreeSet<_> = splits.iter().cloned().collect();
                assert_eq!(uniq.len(), splits.len());
                for s in &splits {
                    assert_eq!(s.left.lowest(), cs.lowest());
                    assert!(a.realizes(&cs, &s.left), "{a:?} {cs:?} {s:?}");
                    assert!(a.realizes(&cs, &s.right));
                    assert_eq!(s.left.union(&s.right), cs);
                }
                // every realizable side shows up
                let count = (1..c + 1)
                    .filter(|&s| s & c == s && s != c && s & (c & c.wrapping_neg()) != 0)
                    .filter(|&s| a.realizes(&cs, &OutcomeSet::from_mask(s)))
                    .count();
                assert_eq!(count, splits.len(), "{a:?} {cs:?}");
            }
        }
    }

    /// Exhaustive top-down search: can `c` be split by ranges, never cutting
    /// a block, down to single blocks?
    fn completable_oracle(c: u64, block_of: &[usize]) -> bool {
        let members: Vec<usize> = (0..64).filter(|&i| c >> i & 1 == 1).collect();
        let blocks: BTreeSet<usize> = members.iter().map(|&i| block_of[i]).collect();
        if blocks.len() <= 1 {
            return true;
        }
        DecisionSet::Interval(64).split_masks(c).into_iter().any(|left| {
            let cuts = members.iter().any(|&i| {
                let side = left >> i & 1;
                members.iter().any(|&j| block_of[j] == block_of[i] && left >> j & 1 != side)
            });
            !cuts && completable_oracle(left, block_of) && completable_oracle(c & !left, block_of)
        })
    }

    #[test]
    fn interval_completability_matches_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut seen = [0usize; 2];
        for _ in 0..2000 {
            let n = rng.random_range(1..=8);
            let k = rng.random_range(1..=n);
            let block_of: Vec<usize> = (0..n).map(|_| rng.random_range(0..k)).collect();
            let blocks: Vec<OutcomeSet> = (0..k)
                .map(|b| (0..n).filter(|&i| block_of[i] == b).collect())
                .filter(|s: &OutcomeSet| !s.is_empty())
                .collect();
            let fast = interval_blocks_completable(&blocks);
            assert_eq!(fast, completable_oracle((1 << n) - 1, &block_of), "{blocks:?}");
            seen[fast as usize] += 1;
        }
        assert!(seen[0] > 100 && seen[1] > 100, "{seen:?}");
    }

    #[test]
    fn interval_realizes_relative_runs() {
        let a = DecisionSet::Interval(8);
        let c: OutcomeSet = [0, 2, 3, 6].into();
        assert!(a.realizes(&c, &[2, 3].into()));
        assert!(a.realizes(&c, &[0, 6].into())); // complement of a run
        assert!(!a.realizes(&c, &[0, 3].into()));
        assert!(!a.realizes(&c, &c));
        assert!(!a.realizes(&c, &OutcomeSet::default()));
    }
}
