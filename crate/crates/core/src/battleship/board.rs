use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Occupancy grid, row-major, one bit per cell.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Board(pub u128);

impl Board {
    pub fn occupied(&self, cell: usize) -> bool {
        self.0 >> cell & 1 == 1
    }

    pub fn popcount(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn cells(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let c = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                c
            })
        })
    }

    pub fn render(&self, cfg: &BoardConfig) -> String {
        let mut s = String::with_capacity(cfg.cells() + cfg.rows);
        for r in 0..cfg.rows {
            for c in 0..cfg.cols {
                s.push(if self.occupied(cfg.cell(r, c)) { '#' } else { '.' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Board({:#x})", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoardConfig {
    pub rows: usize,
    pub cols: usize,
    pub ships: Vec<usize>,
}

impl Default for BoardConfig {
    fn default() -> Self {
        BoardConfig { rows: 10, cols: 10, ships: vec![5, 4, 3] }
    }
}

impl BoardConfig {
    pub fn new(rows: usize, cols: usize, ships: Vec<usize>) -> Result<Self> {
        let cfg = BoardConfig { rows, cols, ships };
        cfg.check()?;
        Ok(cfg)
    }

    fn check(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 || self.rows * self.cols > 128 {
            return Err(Error::ImpossibleConfig(format!(
                "{}x{} board must have between 1 and 128 cells",
                self.rows, self.cols
            )));
        }
        if self.ships.is_empty() {
            return Err(Error::ImpossibleConfig("no ships".into()));
        }
        if let Some(&s) = self.ships.iter().find(|&&s| s == 0 || s > self.rows.max(self.cols)) {
            return Err(Error::ImpossibleConfig(format!(
                "ship of length {s} does not fit on a {}x{} board",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    pub fn cell(&self, row: usize, col: usize) -> usize {
        row * self.cols + col
    }

    pub fn coords(&self, cell: usize) -> (usize, usize) {
        (cell / self.cols, cell % self.cols)
    }

    pub fn occupied_cells(&self) -> u32 {
        self.ships.iter().sum::<usize>() as u32
    }

    /// Every horizontal and vertical position of one ship.
    pub fn placements(&self, len: usize) -> Vec<u128> {
        let mut out = Vec::new();
        let run = |n: usize| (1u128 << n) - 1;
        if len <= self.cols {
            for r in 0..self.rows {
                for c in 0..=self.cols - len {
                    out.push(run(len) << self.cell(r, c));
                }
            }
        }
        if len <= self.rows && len > 1 {
            for r in 0..=self.rows - len {
                for c in 0..self.cols {
                    out.push((0..len).fold(0u128, |m, k| m | 1 << self.cell(r + k, c)));
                }
            }
        }
        out
    }
}

/// The hypothesis space: distinct occupancy grids, sorted, each weighted by
/// the number of placement tuples (layouts) that produce it.
#[derive(Debug, Clone)]
pub struct BoardSet {
    pub config: BoardConfig,
    boards: Vec<Board>,
    layouts: Vec<u32>,
    /// Total number of layouts, `Σ layouts`.
    pub raw_layouts: u64,
}

impl BoardSet {
    /// Builds the set from one board per layout; repeated grids are merged
    /// and counted.
    pub fn from_boards(config: BoardConfig, mut boards: Vec<Board>) -> Result<Self> {
        config.check()?;
        let raw_layouts = boards.len() as u64;
        boards.sort_unstable();
        let mut distinct: Vec<Board> = Vec::new();
        let mut layouts: Vec<u32> = Vec::new();
        for b in boards {
            if distinct.last() == Some(&b) {
                *layouts.last_mut().expect("parallel to distinct") += 1;
            } else {
                distinct.push(b);
                layouts.push(1);
            }
        }
        if distinct.is_empty() {
            return Err(Error::EmptyBoardSet);
        }
        let boards = distinct;
        Ok(BoardSet { config, boards, layouts, raw_layouts })
    }

    pub fn boards(&self) -> &[Board] {
        &self.boards
    }

    /// Layout count of each board in [`boards`](Self::boards).
    pub fn layouts(&self) -> &[u32] {
        &self.layouts
    }

    pub(crate) fn weighted(&self) -> Vec<(Board, u32)> {
        self.boards.iter().copied().zip(self.layouts.iter().copied()).collect()
    }

    pub fn len(&self) -> usize {
        self.boards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boards.is_empty()
    }

    pub fn contains(&self, b: &Board) -> bool {
        self.boards.binary_search(b).is_ok()
    }

    /// Fewest queries an average game could need: `⌈log2 |set|⌉`.
    pub fn query_floor(&self) -> u32 {
        (self.len() as f64).log2().ceil() as u32
    }
}

/// Places every ship in every position without overlap (ships may touch).
///
/// The outer loop over the first ship's positions runs in parallel; chunks
/// are concatenated in placement order.
pub fn enumerate_boards(config: &BoardConfig) -> Result<BoardSet> {
    config.check()?;
    let per_ship: Vec<Vec<u128>> = config.ships.iter().map(|&s| config.placements(s)).collect();
    let chunks: Vec<Vec<u128>> = per_ship[0]
        .par_iter()
        .map(|&first| {
            let mut out = Vec::new();
            extend(first, &per_ship[1..], &mut out);
            out
        })
        .collect();
    let raw: Vec<Board> = chunks.into_iter().flatten().map(Board).collect();
    if raw.is_empty() {
        return Err(Error::ImpossibleConfig("ships cannot all fit without overlapping".into()));
    }
    BoardSet::from_boards(config.clone(), raw)
}

fn extend(occupied: u128, rest: &[Vec<u128>], out: &mut Vec<u128>) {
    match rest.split_first() {
        None => out.push(occupied),
        Some((ship, tail)) => {
            for &p in ship {
                if p & occupied == 0 {
                    extend(occupied | p, tail, out);
                }
            }
        }
    }
}
