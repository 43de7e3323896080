use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use querytree::battleship::BoardConfig;
use querytree::dna::experiment::CompareConfig;
use querytree::harness::{self, BattleshipConfig, DnaCompareConfig, Format, Output};
use querytree::sampling::DEFAULT_SEED;
use querytree::solvers::{GreedyOptions, DEFAULT_MERGE_BUDGET};

/// Binary decision trees under constrained question families.
///
/// Exit status: 0 on success, 2 when the instance has no feasible tree,
/// 1 on usage or I/O errors.
#[derive(Parser)]
#[command(name = "querytree", version)]
struct Cli {
    /// Master seed; every random choice derives from it.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Directory for artifacts; nothing is written without it.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Artifact format (csv, json, or svg = csv plus plots). With json the
    /// report on stdout is JSON too.
    #[arg(long, global = true, default_value_t = Format::Csv)]
    format: Format,
    /// Worker threads (default: one per core).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The bad-wine worked examples.
    Wine,
    /// Entropy, Huffman, GBSC and Shannon lengths of a distribution file.
    Codes {
        /// One probability per line (decimal or a/b); `#` starts a comment.
        file: PathBuf,
    },
    /// Exact vs. greedy Huffman vs. GBSC on random range-query instances.
    DnaCompare {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        instances: usize,
        /// Skip the exact solver.
        #[arg(long)]
        no_brute: bool,
        /// Also time both heuristics at these sizes, e.g. 4,8,16,32,64.
        #[arg(long, value_delimiter = ',', value_name = "SIZES")]
        sweep: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        sweep_seeds: usize,
        /// Fill the per-instance timing columns (not reproducible).
        #[arg(long)]
        timings: bool,
        /// Merge attempts before greedy Huffman gives up on an instance.
        #[arg(long, default_value_t = DEFAULT_MERGE_BUDGET)]
        budget: u64,
    },
    /// Single-player Battleship.
    Battleship {
        #[command(subcommand)]
        command: BattleshipCommand,
    },
}

#[derive(Subcommand)]
enum BattleshipCommand {
    /// Play against random targets and report query statistics.
    Bench {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, default_value_t = 1000)]
        games: usize,
    },
    /// Play one game with a transcript.
    Play {
        #[command(flatten)]
        board: BoardArgs,
        /// Seed that picks the target board (default: --seed).
        #[arg(long)]
        target_seed: Option<u64>,
    },
}

#[derive(Args)]
struct BoardArgs {
    #[arg(long, default_value_t = 10)]
    rows: usize,
    #[arg(long, default_value_t = 10)]
    cols: usize,
    /// Ship lengths.
    #[arg(long, value_delimiter = ',', default_value = "5,4,3")]
    ships: Vec<usize>,
}

impl BoardArgs {
    fn config(&self) -> querytree::Result<BoardConfig> {
        BoardConfig::new(self.rows, self.cols, self.ships.clone())
    }
}

fn emit<R: Display + Serialize>(report: &R, format: Format) -> querytree::Result<()> {
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(report)?);
    } else {
        print!("{report}");
    }
    Ok(())
}

fn run(cli: Cli) -> querytree::Result<()> {
    if let Some(n) = cli.threads {
        // fails only if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let out = Output::new(cli.out.clone(), cli.format);
    match cli.command {
        Command::Wine => emit(&harness::cmd_wine(&out)?, cli.format)?,
        Command::Codes { file } => emit(&harness::cmd_codes(&file, &out)?, cli.format)?,
        Command::DnaCompare { n, instances, no_brute, sweep, sweep_seeds, timings, budget } => {
            let cfg = DnaCompareConfig {
                compare: CompareConfig {
                    n,
                    instances,
                    seed: cli.seed,
                    brute_force: !no_brute,
                    greedy: GreedyOptions { budget },
                    ..CompareConfig::default()
                },
                sweep_sizes: sweep,
                sweep_seeds,
                timings,
            };
            emit(&harness::cmd_dna_compare(&cfg, &out)?, cli.format)?
        }
        Command::Battleship { command } => match command {
            BattleshipCommand::Bench { board, games } => {
                let cfg = BattleshipConfig { board: board.config()?, games, seed: cli.seed };
                emit(&harness::cmd_battleship_bench(&cfg, &out)?, cli.format)?
            }
            BattleshipCommand::Play { board, target_seed } => {
                let report = harness::cmd_battleship_play(&board.config()?, target_seed.unwrap_or(cli.seed), &out)?;
                emit(&report, cli.format)?
            }
        },
    }
    for path in out.written() {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_infeasible() { 2 } else { 1 })
        }
    }
}
