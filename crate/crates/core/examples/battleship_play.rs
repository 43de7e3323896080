//! One Battleship game on the standard board, shown as the hit-probability
//! map before every shot.
//!
//!     cargo run --release --example battleship_play -- [target-seed]

use querytree::battleship::{enumerate_boards, hit_probability, play_game, BoardConfig, BoardSet};
use querytree::sampling;
use rand::Rng;

fn heat(set: &BoardSet) -> String {
    const SHADES: &[u8] = b" .:-=+*#%@";
    let m = hit_probability(set);
    let mut s = String::new();
    for r in 0..m.rows {
        for c in 0..m.cols {
            let p = m.prob(r, c);
            s.push(SHADES[((p * 9.0).round() as usize).min(9)] as char);
        }
        s.push('\n');
    }
    s
}

fn main() -> querytree::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(sampling::DEFAULT_SEED);
    let cfg = BoardConfig::default();
    let set = enumerate_boards(&cfg)?;
    let target = set.boards()[sampling::rng(seed).random_range(0..set.len())];
    println!("target:\n{}", target.render(&cfg));
    println!("initial hit probabilities:\n{}", heat(&set));

    let game = play_game(target, &set)?;
    let mut alive = set.boards().to_vec();
    for (t, step) in game.steps.iter().enumerate() {
        let cell = cfg.cell(step.query.0, step.query.1);
        alive.retain(|b| b.occupied(cell) == step.hit);
        let word = if step.hit { "hit " } else { "miss" };
        println!("{:>2}: {:?} {word} -> {:.2} bits", t + 1, step.query, step.entropy_bits);
    }
    let remaining = BoardSet::from_boards(cfg.clone(), alive)?;
    println!("\nfinal map after {} shots:\n{}", game.total_queries, heat(&remaining));
    Ok(())
}
