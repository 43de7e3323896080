//! Invariants checked on generated inputs.

mod common;

use proptest::prelude::*;

use querytree::battleship::{enumerate_boards, play_game, BoardConfig};
use querytree::codes::shannon_code_length;
use querytree::dna::{can_merge, dna_gbsc, dna_greedy_huffman};
use querytree::solvers::{greedy_huffman, greedy_huffman_with, GreedyOptions};
use querytree::{
    brute_force_optimal, entropy, gbsc, huffman_tree, shannon_length, DecisionSet, DecisionTree, Distribution, Node,
    OutcomeSet,
};

const TOL: f64 = 1e-9;

fn distribution(max_n: usize) -> impl Strategy<Value = Distribution> {
    prop::collection::vec(1u32..1000, 1..=max_n)
        .prop_map(|w| Distribution::from_weights(&w.iter().map(|&x| x as f64).collect::<Vec<_>>()).unwrap())
}

/// A random tree over `0..n`: shuffle, then split recursively at random.
fn tree(max_n: usize) -> impl Strategy<Value = DecisionTree> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        fn build(items: &[usize], seed: &mut u64) -> Node {
            if items.len() == 1 {
                return Node::leaf(items[0]);
            }
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let cut = 1 + (*seed >> 33) as usize % (items.len() - 1);
            let left = build(&items[..cut], seed);
            let right = build(&items[cut..], seed);
            Node::join(left, right).unwrap()
        }
        let mut s = seed;
        let mut items: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            items.swap(i, (s >> 33) as usize % (i + 1));
        }
        DecisionTree::new(build(&items, &mut s)).unwrap()
    })
}

fn family(n: usize) -> impl Strategy<Value = DecisionSet> {
    let explicit = prop::collection::vec(prop::collection::btree_set(0..n, 1..n.max(2)), 1..8)
        .prop_map(|sets| DecisionSet::Explicit(sets.into_iter().map(|s| s.into_iter().collect()).collect()));
    prop_oneof![Just(DecisionSet::Unconstrained), Just(DecisionSet::Interval(n)), explicit]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn trees_never_beat_entropy(t in tree(10), w in prop::collection::vec(1u32..1000, 10)) {
        let n = t.alphabet_size();
        let d = Distribution::from_weights(&w[..n].iter().map(|&x| x as f64).collect::<Vec<_>>()).unwrap();
        prop_assert!(t.expected_depth(&d).unwrap() >= entropy(&d) - TOL);
        prop_assert!(t.validate(&DecisionSet::Unconstrained).is_feasible());
    }

    #[test]
    fn tree_json_round_trips(t in tree(12)) {
        prop_assert_eq!(DecisionTree::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn huffman_matches_exhaustive_optimum(d in distribution(7)) {
        let outcomes: Vec<usize> = (0..d.len()).collect();
        let best = common::unconstrained_optimum(d.probs(), &outcomes);
        let h = huffman_tree(&d).expected_depth(&d).unwrap();
        prop_assert!((h - best).abs() < TOL, "huffman {} vs {}", h, best);
    }

    #[test]
    fn shannon_within_one_bit(d in distribution(24)) {
        prop_assert!(shannon_length(&d) < entropy(&d) + 1.0);
    }

    #[test]
    fn unconstrained_dominance(d in distribution(12)) {
        let brute = brute_force_optimal(&d, &DecisionSet::Unconstrained).unwrap().expected_len;
        let huff = huffman_tree(&d).expected_depth(&d).unwrap();
        let g = gbsc(&d, &DecisionSet::Unconstrained).unwrap();
        prop_assert!((brute - huff).abs() < TOL);
        prop_assert!(huff <= g.expected_len + TOL);
        prop_assert!(g.expected_len <= shannon_length(&d) + TOL);
        for (x, depth) in g.tree.leaf_depths() {
            prop_assert!(depth <= shannon_code_length(d.p(x)));
        }
        let greedy = greedy_huffman(&d, &DecisionSet::Unconstrained).unwrap();
        prop_assert!((greedy.expected_len - huff).abs() < TOL);
    }

    #[test]
    fn exact_solver_is_a_lower_bound(
        (d, family) in (2usize..=8).prop_flat_map(|n| (
            prop::collection::vec(1u32..1000, n)
                .prop_map(|w| Distribution::from_weights(&w.iter().map(|&x| x as f64).collect::<Vec<_>>()).unwrap()),
            family(n),
        ))
    ) {
        match brute_force_optimal(&d, &family) {
            Ok(best) => {
                prop_assert!(best.tree.validate(&family).is_feasible());
                prop_assert!((best.tree.expected_depth(&d).unwrap() - best.expected_len).abs() < TOL);
                for other in [greedy_huffman(&d, &family), gbsc(&d, &family)].into_iter().flatten() {
                    prop_assert!(other.tree.validate(&family).is_feasible());
                    prop_assert!(best.expected_len <= other.expected_len + TOL);
                }
            }
            // then no tree exists, so the heuristics must fail too
            Err(e) => {
                prop_assert!(e.is_infeasible());
                prop_assert!(gbsc(&d, &family).is_err());
                prop_assert!(greedy_huffman(&d, &family).is_err());
            }
        }
    }

    #[test]
    fn completeness_needs_enough_bipartitions(n in 1usize..=7, f in (1usize..=7).prop_flat_map(family)) {
        let count = f.realizable_bipartitions(n).unwrap();
        if count < (1usize << (n - 1)) - 1 {
            prop_assert!(!f.is_decision_complete(n).unwrap());
        }
        let c = OutcomeSet::full(n);
        if n <= 6 {
            if let Ok(splits) = f.splits(&c) {
                let mut seen = std::collections::HashSet::new();
                prop_assert!(splits.iter().all(|s| seen.insert(s.left.clone())));
            }
        }
    }

    #[test]
    fn range_solvers_against_exact(d in distribution(8)) {
        let n = d.len();
        let family = DecisionSet::Interval(n);
        let best = brute_force_optimal(&d, &family).unwrap().expected_len;
        let greedy = dna_greedy_huffman(&d, GreedyOptions::default()).unwrap();
        let g = dna_gbsc(&d).unwrap();
        prop_assert!(greedy.tree.validate(&family).is_feasible());
        prop_assert!(g.tree.validate(&family).is_feasible());
        prop_assert!(best <= greedy.expected_len + TOL && best <= g.expected_len + TOL);
    }

    #[test]
    fn pruning_never_changes_the_greedy_tree(d in distribution(9)) {
        // the same mergeability test without the completability shortcut
        let plain = |a: &OutcomeSet, b: &OutcomeSet| can_merge(a, b).unwrap_or(false);
        let slow = greedy_huffman_with(&d, &plain, GreedyOptions::default()).unwrap();
        let fast = dna_greedy_huffman(&d, GreedyOptions::default()).unwrap();
        prop_assert_eq!(slow.tree, fast.tree);
    }

    #[test]
    fn distribution_files_parse_back(d in distribution(12)) {
        let text: String = d.probs().iter().map(|p| format!("{p:?}\n")).collect();
        let back = Distribution::<f64>::parse(&format!("# generated\n{text}")).unwrap();
        prop_assert_eq!(back.probs(), d.probs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn battleship_games_are_consistent(rows in 2usize..=5, cols in 2usize..=5, pick in any::<prop::sample::Index>()) {
        let cfg = BoardConfig::new(rows, cols, vec![2, 2]).unwrap();
        let Ok(set) = enumerate_boards(&cfg) else { return Ok(()) };
        let target = set.boards()[pick.index(set.len())];
        let t = play_game(target, &set).unwrap();
        let mut alive = set.boards().to_vec();
        let mut asked = std::collections::HashSet::new();
        for s in &t.steps {
            let cell = cfg.cell(s.query.0, s.query.1);
            prop_assert!(asked.insert(cell), "cell asked twice");
            prop_assert_eq!(s.hit, target.occupied(cell));
            let before = alive.len();
            alive.retain(|b| b.occupied(cell) == s.hit);
            prop_assert!(alive.len() < before, "an informative query always removes a board");
            prop_assert!(alive.contains(&target));
            prop_assert_eq!(alive.len(), s.remaining);
        }
        prop_assert_eq!(alive, vec![target]);
        let trace = t.entropy_trace();
        prop_assert!(trace.windows(2).all(|w| w[1] < w[0]));
        prop_assert_eq!(*trace.last().unwrap(), 0.0);
    }
}
