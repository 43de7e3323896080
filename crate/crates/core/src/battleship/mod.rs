//! Single-player Battleship as a constrained identification problem.
//!
//! The hidden layout is one of the boards in a [`BoardSet`]; each shot asks
//! "is cell (r, c) occupied?". The solver shoots the cell whose hit
//! probability over the surviving boards is closest to one half.

mod board;
mod experiment;
mod game;

pub use board::{enumerate_boards, Board, BoardConfig, BoardSet};
pub use experiment::{run_experiment, BenchStats, HISTOGRAM_BIN_WIDTH};
pub use game::{hit_probability, play_game, select_query, GameTranscript, HitMatrix, Step};
