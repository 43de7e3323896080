//! Entropy, Huffman, GBSC and Shannon code lengths of a distribution file,
//! or of (0.1, 0.2, 0.3, 0.4) when no file is given.
//!
//!     cargo run --release --example codes -- [FILE]

use querytree::harness::{cmd_codes, codes_report, Output};
use querytree::Distribution;

fn main() -> querytree::Result<()> {
    let report = match std::env::args().nth(1) {
        Some(path) => cmd_codes(path.as_ref(), &Output::none())?,
        None => codes_report(&Distribution::new(vec![0.1, 0.2, 0.3, 0.4])?, &Output::none())?,
    };
    print!("{report}");
    Ok(())
}
