//! Independent reference implementations shared by the integration tests.
//! They enumerate everything and share no code with the solvers beyond the
//! tree type itself.

#![allow(dead_code)]

use querytree::{DecisionSet, DecisionTree, Distribution, Mass, Node, OutcomeSet};

/// Every full binary tree whose leaves are exactly `outcomes`, with mirror
/// images counted once.
pub fn all_trees(outcomes: &[usize]) -> Vec<Node> {
    if outcomes.len() == 1 {
        return vec![Node::leaf(outcomes[0])];
    }
    let rest = &outcomes[1..];
    let mut out = Vec::new();
    // the first outcome always goes left; every subset of the rest joins it
    // except the whole rest
    for mask in 0..(1u32 << rest.len()) - 1 {
        let mut left = vec![outcomes[0]];
        let mut right = Vec::new();
        for (i, &x) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(x);
            } else {
                right.push(x);
            }
        }
        let rights = all_trees(&right);
        for l in all_trees(&left) {
            for r in &rights {
                out.push(Node::join(l.clone(), r.clone()).expect("disjoint sides"));
            }
        }
    }
    out
}

/// Smallest expected depth over every tree on `0..n` that `family` can
/// realize, found by listing all of them; `None` if none is feasible.
pub fn exhaustive_optimum<M: Mass>(d: &Distribution<M>, family: &DecisionSet) -> Option<M> {
    let outcomes: Vec<usize> = (0..d.len()).collect();
    all_trees(&outcomes)
        .into_iter()
        .map(|root| DecisionTree::new(root).expect("root covers 0..n"))
        .filter(|t| t.validate(family).is_feasible())
        .map(|t| t.expected_depth(d).expect("same alphabet"))
        .reduce(|a, b| if b < a { b } else { a })
}

/// Minimum expected depth over all unconstrained trees, by plain recursion
/// over every bipartition (no memo).
pub fn unconstrained_optimum(p: &[f64], set: &[usize]) -> f64 {
    if set.len() <= 1 {
        return 0.0;
    }
    let mass: f64 = set.iter().map(|&x| p[x]).sum();
    let rest = &set[1..];
    let mut best = f64::INFINITY;
    for mask in 0..(1u32 << rest.len()) - 1 {
        let (mut a, mut b) = (vec![set[0]], Vec::new());
        for (i, &x) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(x);
            } else {
                b.push(x);
            }
        }
        best = best.min(unconstrained_optimum(p, &a) + unconstrained_optimum(p, &b));
    }
    mass + best
}

/// Does some range of positions pick out exactly `a` or exactly `b` from
/// `a ∪ b`?
pub fn interval_oracle(a: &OutcomeSet, b: &OutcomeSet, n: usize) -> bool {
    let union = a.union(b);
    (0..n).any(|lo| {
        (lo..n).any(|hi| {
            let inside: OutcomeSet = union.iter().filter(|&x| lo <= x && x <= hi).collect();
            &inside == a || &inside == b
        })
    })
}
