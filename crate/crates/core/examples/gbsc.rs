//! Top-down balanced separation under three question families, compared
//! with the exact optimum.
//!
//!     cargo run --release --example gbsc

use querytree::{brute_force_optimal, gbsc, DecisionSet, Distribution};

fn main() -> querytree::Result<()> {
    let d = Distribution::<f64>::parse("0.05\n0.3\n0.1\n0.25\n0.2\n0.1\n")?;
    let families = [
        ("any subset", DecisionSet::Unconstrained),
        ("ranges", DecisionSet::Interval(d.len())),
        ("wine tastings", DecisionSet::WinePairs(4)),
    ];
    for (name, family) in &families {
        let g = gbsc(&d, family)?;
        let best = brute_force_optimal(&d, family)?;
        println!(
            "{name:>14}: GBSC {:.4} ({} nodes), optimum {:.4}, feasible: {}",
            g.expected_len,
            g.tree.node_count(),
            best.expected_len,
            g.tree.validate(family).is_feasible()
        );
    }
    let g = gbsc(&d, &DecisionSet::Interval(d.len()))?;
    for x in 0..d.len() {
        let (_, depth) = g.tree.locate(x).expect("every outcome has a leaf");
        println!("  position {} found after {depth} range queries", x + 1);
    }
    Ok(())
}
