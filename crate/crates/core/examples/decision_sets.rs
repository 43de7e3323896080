//! Which question families make plain Huffman optimal, and what the
//! realizable splits of a candidate set look like.
//!
//!     cargo run --release --example decision_sets

use querytree::{DecisionSet, OutcomeSet};

fn main() -> querytree::Result<()> {
    let families = [
        ("any subset, n=6", DecisionSet::Unconstrained, 6),
        ("ranges, n=3", DecisionSet::Interval(3), 3),
        ("ranges, n=6", DecisionSet::Interval(6), 6),
        ("wine tastings, 4 bottles", DecisionSet::WinePairs(4), 6),
    ];
    for (name, family, n) in &families {
        println!(
            "{name:>26}: {:>3} of {:>3} bipartitions realizable, decision-complete: {}",
            family.realizable_bipartitions(*n)?,
            (1usize << (n - 1)) - 1,
            family.is_decision_complete(*n)?
        );
    }
    let c: OutcomeSet = [0, 2, 3, 5].into_iter().collect();
    println!("\nrange splits of {:?}:", c.as_slice());
    for s in DecisionSet::Interval(6).splits(&c)? {
        println!("  {:?} | {:?}", s.left.as_slice(), s.right.as_slice());
    }
    Ok(())
}
