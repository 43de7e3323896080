//! Plays the hit-probability-one-half strategy against random boards and
//! writes the statistics, histogram and entropy traces (CSV + SVG).
//!
//!     cargo run --release --example battleship_bench -- [games] [out-dir]

use querytree::harness::{cmd_battleship_bench, BattleshipConfig, Format, Output};

fn main() -> querytree::Result<()> {
    let mut args = std::env::args().skip(1);
    let games = args.next().and_then(|g| g.parse().ok()).unwrap_or(1000);
    let out = Output::new(args.next().map(Into::into), Format::Svg);
    let cfg = BattleshipConfig { games, ..BattleshipConfig::default() };
    print!("{}", cmd_battleship_bench(&cfg, &out)?);
    for path in out.written() {
        println!("wrote {}", path.display());
    }
    Ok(())
}
