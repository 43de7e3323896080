//! The bad-wine examples: Huffman is optimal when any tasting mix is
//! allowed, but with two bad bottles its tree asks a question no tasting
//! can answer.
//!
//!     cargo run --release --example wine

use querytree::harness::{bad_wine, more_bad_wine};
use querytree::{brute_force_optimal, huffman_tree, DecisionSet};

fn main() -> querytree::Result<()> {
    let one_bad = bad_wine();
    let tree = huffman_tree(&one_bad);
    println!("one bad bottle: Huffman needs {} tastings on average", tree.expected_depth(&one_bad)?);

    let two_bad = more_bad_wine();
    let tastings = DecisionSet::WinePairs(4);
    let huffman = huffman_tree(&two_bad);
    println!("two bad bottles: Huffman bound {}", huffman.expected_depth(&two_bad)?);
    for v in huffman.validate(&tastings).violations {
        let at = if v.path.is_empty() { "root" } else { v.path.as_str() };
        println!("  no tasting splits {:?} off {:?} (at {at})", v.query.as_slice(), v.candidates.as_slice());
    }

    let best = brute_force_optimal(&two_bad, &tastings)?;
    println!("best tasting plan: {} tastings on average", best.expected_len);
    println!("{}", best.tree.to_json());
    Ok(())
}
