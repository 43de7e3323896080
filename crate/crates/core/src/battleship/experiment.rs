use rand::Rng;
use serde::Serialize;

use crate::error::Result;
use crate::sampling;

use super::board::{Board, BoardSet};
use super::game::{select_query, weighted_hits, GameTranscript, Step};

pub const HISTOGRAM_BIN_WIDTH: usize = 2;

#[derive(Debug, Clone, Serialize)]
pub struct BenchStats {
    pub boards: usize,
    pub raw_layouts: u64,
    /// `⌈log2 boards⌉`.
    pub query_floor: u32,
    /// Index into the board set of each game's target.
    pub targets: Vec<usize>,
    pub games: Vec<GameTranscript>,
    pub mean: f64,
    /// Population standard deviation of the query counts.
    pub stddev: f64,
    /// `(lower edge, count)` for bins of [`HISTOGRAM_BIN_WIDTH`] queries.
    pub histogram: Vec<(usize, usize)>,
}

impl BenchStats {
    pub fn query_counts(&self) -> Vec<usize> {
        self.games.iter().map(|g| g.total_queries).collect()
    }
}

/// Plays `num_targets` games against targets drawn uniformly (with
/// replacement) from `set`.
///
/// The strategy is deterministic, so games that have seen the same answers
/// are in the same state. Games are therefore played together as a walk of
/// the strategy's decision tree restricted to the sampled targets: each
/// surviving-board set is counted once no matter how many games pass
/// through it. Transcripts are identical to [`play_game`](super::play_game).
pub fn run_experiment(set: &BoardSet, num_targets: usize, master_seed: u64) -> Result<BenchStats> {
    let mut rng = sampling::rng(master_seed);
    let targets: Vec<usize> = (0..num_targets).map(|_| rng.random_range(0..set.len())).collect();
    let group: Vec<(usize, Board)> = targets.iter().enumerate().map(|(g, &i)| (g, set.boards()[i])).collect();

    let walk = Walk { set };
    let mut finished = walk.descend(set.weighted(), group, 0, Vec::new())?;
    finished.sort_unstable_by_key(|(g, _)| *g);
    let games: Vec<GameTranscript> = finished.into_iter().map(|(_, t)| t).collect();

    let counts: Vec<f64> = games.iter().map(|g| g.total_queries as f64).collect();
    let n = counts.len().max(1) as f64;
    let mean = counts.iter().sum::<f64>() / n;
    let stddev = (counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / n).sqrt();
    Ok(BenchStats {
        boards: set.len(),
        raw_layouts: set.raw_layouts,
        query_floor: set.query_floor(),
        targets,
        histogram: histogram(games.iter().map(|g| g.total_queries)),
        games,
        mean,
        stddev,
    })
}

fn histogram(counts: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
    let mut bins: Vec<usize> = Vec::new();
    for c in counts {
        let b = c / HISTOGRAM_BIN_WIDTH;
        if bins.len() <= b {
            bins.resize(b + 1, 0);
        }
        bins[b] += 1;
    }
    bins.into_iter().enumerate().map(|(b, k)| (b * HISTOGRAM_BIN_WIDTH, k)).collect()
}

struct Walk<'a> {
    set: &'a BoardSet,
}

impl Walk<'_> {
    /// Plays every game in `games` from the state `alive`/`asked`/`path`;
    /// the hit and miss branches run in parallel.
    fn descend(
        &self,
        alive: Vec<(Board, u32)>,
        games: Vec<(usize, Board)>,
        asked: u128,
        path: Vec<Step>,
    ) -> Result<Vec<(usize, GameTranscript)>> {
        if alive.len() == 1 {
            let t = GameTranscript::new(self.set, path);
            return Ok(games.into_iter().map(|(g, _)| (g, t.clone())).collect());
        }
        let cfg = &self.set.config;
        let (r, c) = select_query(&weighted_hits(&alive, cfg), asked)?;
        let cell = cfg.cell(r, c);
        let (hit_boards, miss_boards): (Vec<_>, Vec<_>) = alive.into_iter().partition(|(b, _)| b.occupied(cell));
        let (hit_games, miss_games): (Vec<_>, Vec<_>) = games.into_iter().partition(|(_, t)| t.occupied(cell));

        let branch = |boards: Vec<(Board, u32)>, games: Vec<(usize, Board)>, hit: bool| {
            if games.is_empty() {
                return Ok(Vec::new());
            }
            let mut path = path.clone();
            path.push(Step::new((r, c), hit, &boards));
            self.descend(boards, games, asked | 1 << cell, path)
        };
        let (hits, misses) =
            rayon::join(|| branch(hit_boards, hit_games, true), || branch(miss_boards, miss_games, false));
        let mut out = hits?;
        out.extend(misses?);
        Ok(out)
    }
}
