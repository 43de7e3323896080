//! Unconstrained baselines: entropy, Huffman trees and Shannon code lengths.

use std::cmp::Ordering;

use crate::distribution::Distribution;
use crate::mass::Mass;
use crate::tree::{DecisionTree, Node};

/// `-Σ p log2 p`, in bits.
pub fn entropy<M: Mass>(d: &Distribution<M>) -> f64 {
    d.probs().iter().map(|p| p.to_f64()).map(|p| -p * p.log2()).sum::<f64>().max(0.0)
}

/// Orders subtrees by `(mass, lowest outcome)`; masses within tolerance
/// count as equal.
pub(crate) fn key_cmp<M: Mass>(a: (M, usize), b: (M, usize)) -> Ordering {
    if a.0.approx_eq(b.0) {
        a.1.cmp(&b.1)
    } else if a.0 < b.0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Optimal unconstrained prefix tree.
///
/// Repeatedly merges the two subtrees with the smallest
/// `(mass, lowest outcome)` keys; the smaller key becomes the left child.
pub fn huffman_tree<M: Mass>(d: &Distribution<M>) -> DecisionTree {
    let mut pool: Vec<(M, Node)> = d.probs().iter().enumerate().map(|(i, &p)| (p, Node::leaf(i))).collect();
    let key = |e: &(M, Node)| (e.0, e.1.candidates().lowest().unwrap_or(usize::MAX));
    while pool.len() > 1 {
        let a = argmin_by(&pool, |x, y| key_cmp(key(x), key(y)));
        let (ma, na) = pool.swap_remove(a);
        let b = argmin_by(&pool, |x, y| key_cmp(key(x), key(y)));
        let (mb, nb) = pool.swap_remove(b);
        let merged = Node::join(na, nb).expect("huffman subtrees are disjoint");
        pool.push((ma + mb, merged));
    }
    let (_, root) = pool.pop().expect("distribution is nonempty");
    DecisionTree::new(root).expect("huffman tree covers the alphabet")
}

fn argmin_by<T>(v: &[T], mut cmp: impl FnMut(&T, &T) -> Ordering) -> usize {
    let mut best = 0;
    for i in 1..v.len() {
        if cmp(&v[i], &v[best]) == Ordering::Less {
            best = i;
        }
    }
    best
}

/// `⌈-log2 p⌉`, computed by doubling so exact powers of two land exactly.
pub fn shannon_code_length<M: Mass>(p: M) -> usize {
    let two = M::from_count(2);
    let mut x = p;
    let mut len = 0;
    while x.approx_lt(M::one()) {
        x = x * two;
        len += 1;
    }
    len
}

/// Expected Shannon code length `Σ p ⌈-log2 p⌉`.
pub fn shannon_length<M: Mass>(d: &Distribution<M>) -> M {
    d.probs().iter().fold(M::zero(), |acc, &p| acc + p * M::from_count(shannon_code_length(p)))
}
