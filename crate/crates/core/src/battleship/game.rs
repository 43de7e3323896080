use serde::Serialize;

use crate::error::{Error, Result};

use super::board::{Board, BoardConfig, BoardSet};

/// Per-cell hit counts over a set of boards. Probabilities are
/// `count / total`, but comparisons use the integer counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HitMatrix {
    pub rows: usize,
    pub cols: usize,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl HitMatrix {
    pub fn from_counts(rows: usize, cols: usize, counts: Vec<u64>, total: u64) -> Self {
        assert_eq!(counts.len(), rows * cols);
        HitMatrix { rows, cols, counts, total }
    }

    pub fn prob(&self, row: usize, col: usize) -> f64 {
        self.counts[row * self.cols + col] as f64 / self.total as f64
    }

    pub fn probs(&self) -> Vec<f64> {
        self.counts.iter().map(|&c| c as f64 / self.total as f64).collect()
    }

    /// `Σ P_ij`, the expected number of occupied cells.
    pub fn expected_hits(&self) -> f64 {
        self.counts.iter().sum::<u64>() as f64 / self.total as f64
    }
}

/// Layout-weighted occupancy count of every cell, plus the total weight.
pub(crate) fn weighted_hits(alive: &[(Board, u32)], config: &BoardConfig) -> HitMatrix {
    let mut counts = vec![0u64; config.cells()];
    let mut total = 0u64;
    for &(b, w) in alive {
        total += w as u64;
        for c in b.cells() {
            counts[c] += w as u64;
        }
    }
    HitMatrix { rows: config.rows, cols: config.cols, counts, total }
}

/// Fraction of layouts occupying each cell.
pub fn hit_probability(set: &BoardSet) -> HitMatrix {
    weighted_hits(&set.weighted(), &set.config)
}

/// The unasked cell whose hit probability is closest to one half, i.e.
/// minimizing `|2·count - total|`; row-major order breaks ties. Cells that
/// every board agrees on are skipped.
pub fn select_query(m: &HitMatrix, asked: u128) -> Result<(usize, usize)> {
    let mut best: Option<(u64, usize)> = None;
    for (cell, &count) in m.counts.iter().enumerate() {
        if asked >> cell & 1 == 1 || count == 0 || count == m.total {
            continue;
        }
        let score = (2 * count).abs_diff(m.total);
        if best.is_none_or(|(s, _)| score < s) {
            best = Some((score, cell));
        }
    }
    let (_, cell) = best.ok_or(Error::AlreadyDetermined)?;
    Ok((cell / m.cols, cell % m.cols))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Step {
    pub query: (usize, usize),
    pub hit: bool,
    /// Distinct boards left after the answer.
    pub remaining: usize,
    /// Layouts left after the answer.
    pub remaining_layouts: u64,
    /// `log2(remaining_layouts)`, or 0 once a single board is left: layouts
    /// with the same grid cannot be told apart and count as one.
    pub entropy_bits: f64,
}

impl Step {
    pub(crate) fn new(query: (usize, usize), hit: bool, alive: &[(Board, u32)]) -> Self {
        let layouts: u64 = alive.iter().map(|&(_, w)| w as u64).sum();
        Step {
            query,
            hit,
            remaining: alive.len(),
            remaining_layouts: layouts,
            entropy_bits: entropy_bits(alive.len(), layouts),
        }
    }
}

fn entropy_bits(boards: usize, layouts: u64) -> f64 {
    if boards <= 1 {
        0.0
    } else {
        (layouts as f64).log2()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GameTranscript {
    pub initial_remaining: usize,
    pub initial_layouts: u64,
    pub initial_entropy_bits: f64,
    pub steps: Vec<Step>,
    pub total_queries: usize,
}

impl GameTranscript {
    pub(crate) fn new(initial: &BoardSet, steps: Vec<Step>) -> Self {
        GameTranscript {
            initial_remaining: initial.len(),
            initial_layouts: initial.raw_layouts,
            initial_entropy_bits: entropy_bits(initial.len(), initial.raw_layouts),
            total_queries: steps.len(),
            steps,
        }
    }

    /// `log2 |X_t|` for `t = 0..=total_queries`.
    pub fn entropy_trace(&self) -> Vec<f64> {
        std::iter::once(self.initial_entropy_bits).chain(self.steps.iter().map(|s| s.entropy_bits)).collect()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("transcript serialization is infallible")
    }
}

/// Plays until one board remains, shooting at [`select_query`]'s choice and
/// discarding every board that disagrees with the answer.
pub fn play_game(target: Board, initial: &BoardSet) -> Result<GameTranscript> {
    if !initial.contains(&target) {
        return Err(Error::TargetNotInSpace);
    }
    let cfg = &initial.config;
    let mut alive = initial.weighted();
    let mut asked = 0u128;
    let mut steps = Vec::new();
    while alive.len() > 1 {
        let (r, c) = select_query(&weighted_hits(&alive, cfg), asked)?;
        let cell = cfg.cell(r, c);
        asked |= 1 << cell;
        let hit = target.occupied(cell);
        alive.retain(|(b, _)| b.occupied(cell) == hit);
        steps.push(Step::new((r, c), hit, &alive));
    }
    Ok(GameTranscript::new(initial, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::battleship::enumerate_boards;

    #[test]
    fn singleton_matrix_is_the_board() {
        let cfg = BoardConfig::new(3, 3, vec![2]).unwrap();
        let b = Board(0b11);
        let m = hit_probability(&BoardSet::from_boards(cfg.clone(), vec![b]).unwrap());
        for cell in 0..9 {
            assert_eq!(m.counts[cell] == 1, b.occupied(cell));
        }
        assert!(matches!(BoardSet::from_boards(cfg, vec![]), Err(Error::EmptyBoardSet)));
    }

    #[test]
    fn one_differing_cell_is_half() {
        let cfg = BoardConfig::new(2, 2, vec![1]).unwrap();
        let m = hit_probability(&BoardSet::from_boards(cfg, vec![Board(0b0011), Board(0b0111)]).unwrap());
        let p = m.probs();
        assert_eq!(p[2], 0.5);
        assert!(p.iter().enumerate().all(|(i, &x)| i == 2 || x == 0.0 || x == 1.0));
    }

    #[test]
    fn selection_rules() {
        let mut counts = vec![0; 100];
        counts[27] = 5;
        counts[41] = 5;
        counts[0] = 3;
        let m = HitMatrix::from_counts(10, 10, counts.clone(), 10);
        assert_eq!(select_query(&m, 0).unwrap(), (2, 7));
        assert_eq!(select_query(&m, 1 << 27).unwrap(), (4, 1));

        let mut c2 = vec![0; 100];
        c2[0] = 3;
        c2[1] = 6;
        let m = HitMatrix::from_counts(10, 10, c2, 10);
        assert_eq!(select_query(&m, 0).unwrap(), (0, 1));

        let solved = HitMatrix::from_counts(1, 2, vec![4, 0], 4);
        assert!(matches!(select_query(&solved, 0), Err(Error::AlreadyDetermined)));
    }

    #[test]
    fn trivial_games() {
        let cfg = BoardConfig::new(1, 2, vec![1]).unwrap();
        let one = BoardSet::from_boards(cfg.clone(), vec![Board(0b01)]).unwrap();
        assert_eq!(play_game(Board(0b01), &one).unwrap().total_queries, 0);
        let two = BoardSet::from_boards(cfg, vec![Board(0b01), Board(0b10)]).unwrap();
        let t = play_game(Board(0b10), &two).unwrap();
        assert_eq!(t.total_queries, 1);
        assert_eq!(t.entropy_trace(), vec![1.0, 0.0]);
        assert!(matches!(play_game(Board(0b11), &two), Err(Error::TargetNotInSpace)));
    }

    #[test]
    fn transcript_invariants_on_small_board() {
        let cfg = BoardConfig::new(4, 4, vec![3, 2]).unwrap();
        let set = enumerate_boards(&cfg).unwrap();
        for &target in set.boards().iter().step_by(7) {
            let t = play_game(target, &set).unwrap();
            let trace = t.entropy_trace();
            assert!(trace.windows(2).all(|w| w[1] < w[0]), "{trace:?}");
            assert_eq!(*trace.last().unwrap(), 0.0);
            let mut seen = std::collections::HashSet::new();
            assert!(t.steps.iter().all(|s| seen.insert(s.query)));
            assert!(t.total_queries <= cfg.cells());
        }
    }

    #[test]
    fn layouts_weight_the_matrix_and_trace() {
        // grid 0b01 arises from three layouts, 0b10 from one
        let cfg = BoardConfig::new(1, 2, vec![1]).unwrap();
        let set = BoardSet::from_boards(cfg, vec![Board(0b01), Board(0b10), Board(0b01), Board(0b01)]).unwrap();
        let m = hit_probability(&set);
        assert_eq!((m.counts.as_slice(), m.total), (&[3, 1][..], 4));
        let t = play_game(Board(0b01), &set).unwrap();
        assert_eq!(t.initial_entropy_bits, 2.0);
        assert_eq!((t.steps[0].remaining, t.steps[0].remaining_layouts), (1, 3));
        assert_eq!(t.entropy_trace(), vec![2.0, 0.0]);
    }
}
