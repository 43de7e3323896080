//! Range-query exon search: exact optimum vs. greedy merging vs. GBSC on
//! random instances, plus the runtime sweep over longer sequences.
//!
//!     cargo run --release --example dna_compare -- [n] [instances] [seed]

use querytree::dna::experiment::CompareConfig;
use querytree::harness::{cmd_dna_compare, DnaCompareConfig, Output};

fn main() -> querytree::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cfg = DnaCompareConfig {
        compare: CompareConfig {
            n: args.first().copied().unwrap_or(6) as usize,
            instances: args.get(1).copied().unwrap_or(10_000) as usize,
            seed: args.get(2).copied().unwrap_or(42),
            ..CompareConfig::default()
        },
        sweep_sizes: vec![4, 8, 16, 32, 64],
        ..DnaCompareConfig::default()
    };
    print!("{}", cmd_dna_compare(&cfg, &Output::none())?);
    Ok(())
}
