//! The commands behind the `querytree` binary: worked examples, code-length
//! tables and the two experiments. Each `cmd_*` returns a report that
//! prints for humans (`Display`) and serializes for machines, and writes
//! its artifacts through an [`Output`].
//!
//! Artifacts: `--format csv` writes tables as CSV, `json` writes them as
//! JSON, `svg` writes the CSV tables plus SVG plots. Trees are always JSON
//! and Battleship transcripts always JSON-lines. Files are written only
//! when an output directory is given.

use std::cell::RefCell;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use crate::battleship::{enumerate_boards, play_game, run_experiment, Board, BoardConfig, GameTranscript};
use crate::codes::{entropy, huffman_tree, shannon_length};
use crate::decision_set::DecisionSet;
use crate::distribution::Distribution;
use crate::dna::experiment::{self, linear_r_squared, run_compare, runtime_sweep, summarize, CompareConfig};
use crate::dna::experiment::{CompareSummary, RuntimePoint};
use crate::error::{Error, Result};
use crate::mass::{Exact, FLOAT_TOL};
use crate::plot::{self, Series};
use crate::sampling;
use crate::solvers::{brute_force_optimal, gbsc};
use crate::tree::{DecisionTree, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
    Svg,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "svg" => Ok(Format::Svg),
            other => Err(format!("unknown format {other:?} (expected csv, json or svg)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Svg => "svg",
        })
    }
}

/// Where artifacts go, and in which format.
#[derive(Debug, Default)]
pub struct Output {
    dir: Option<PathBuf>,
    pub format: Format,
    written: RefCell<Vec<PathBuf>>,
}

impl Output {
    pub fn new(dir: Option<PathBuf>, format: Format) -> Self {
        Output { dir, format, written: RefCell::new(Vec::new()) }
    }

    /// Writes nothing; reports are still computed.
    pub fn none() -> Self {
        Output::default()
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Paths written so far, in order.
    pub fn written(&self) -> Vec<PathBuf> {
        self.written.borrow().clone()
    }

    fn plots(&self) -> bool {
        self.format == Format::Svg
    }

    fn write(&self, name: &str, contents: &str) -> Result<()> {
        let Some(dir) = &self.dir else { return Ok(()) };
        fs::create_dir_all(dir)?;
        let path = dir.join(name);
        fs::write(&path, contents)?;
        self.written.borrow_mut().push(path);
        Ok(())
    }

    /// Writes `rows` as `stem.csv` (header from `columns`) or, for JSON, as
    /// `stem.json`: an array of objects keyed by `columns`.
    fn table(&self, stem: &str, columns: &[&str], rows: &[Vec<String>]) -> Result<()> {
        if self.format == Format::Json {
            let objects: Vec<serde_json::Map<String, serde_json::Value>> = rows
                .iter()
                .map(|row| columns.iter().zip(row).map(|(c, v)| (c.to_string(), json_cell(v))).collect())
                .collect();
            return self.write(&format!("{stem}.json"), &(serde_json::to_string_pretty(&objects)? + "\n"));
        }
        let mut csv = columns.join(",") + "\n";
        for row in rows {
            csv += &row.join(",");
            csv.push('\n');
        }
        self.write(&format!("{stem}.csv"), &csv)
    }

    /// Refuses to write a tree that the family cannot realize.
    fn tree(&self, name: &str, tree: &DecisionTree, family: &DecisionSet) -> Result<()> {
        let report = tree.validate(family);
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidTree(format!(
                "refusing to write {name}: split at {:?} is not realizable",
                v.path
            )));
        }
        self.write(name, &(tree.to_json() + "\n"))
    }
}

/// Numbers stay numbers in JSON tables; empty cells become null.
fn json_cell(v: &str) -> serde_json::Value {
    if v.is_empty() {
        serde_json::Value::Null
    } else if let Ok(n) = v.parse::<serde_json::Number>() {
        serde_json::Value::Number(n)
    } else {
        serde_json::Value::String(v.to_string())
    }
}

fn row(cells: &[&dyn fmt::Display]) -> Vec<String> {
    cells.iter().map(|c| c.to_string()).collect()
}

// ---------------------------------------------------------------------------
// wine

/// Example 1: one bad bottle among six.
pub fn bad_wine() -> Distribution<Exact> {
    Distribution::from_ratios(&[(8, 23), (6, 23), (4, 23), (2, 23), (2, 23), (1, 23)]).expect("valid example")
}

/// Example 2: two bad bottles among four; outcomes are the pairs 12, 13, 14,
/// 23, 24, 34.
pub fn more_bad_wine() -> Distribution<Exact> {
    Distribution::from_ratios(&[(1, 10), (1, 10), (3, 20), (3, 20), (3, 10), (1, 5)]).expect("valid example")
}

#[derive(Debug, Clone, Serialize)]
pub struct WineReport {
    pub example1_probs: Vec<String>,
    pub example1_huffman: String,
    pub example1_optimum: String,
    pub example2_probs: Vec<String>,
    /// Expected length of the (unconstrained) Huffman tree.
    pub example2_huffman_bound: String,
    pub example2_huffman_feasible: bool,
    /// The first split of the Huffman tree that no tasting can produce.
    pub example2_violation: Option<Violation>,
    pub example2_feasible_optimum: String,
    pub example2_optimum_exceeds_bound: bool,
}

pub fn cmd_wine(out: &Output) -> Result<WineReport> {
    let d1 = bad_wine();
    let h1 = huffman_tree(&d1);
    let opt1 = brute_force_optimal(&d1, &DecisionSet::Unconstrained)?;

    let d2 = more_bad_wine();
    let pairs = DecisionSet::WinePairs(4);
    let h2 = huffman_tree(&d2);
    let bound = h2.expected_depth(&d2)?;
    let validation = h2.validate(&pairs);
    let opt2 = brute_force_optimal(&d2, &pairs)?;

    let fmt_probs = |d: &Distribution<Exact>| d.probs().iter().map(|p| p.to_string()).collect();
    let report = WineReport {
        example1_probs: fmt_probs(&d1),
        example1_huffman: h1.expected_depth(&d1)?.to_string(),
        example1_optimum: opt1.expected_len.to_string(),
        example2_probs: fmt_probs(&d2),
        example2_huffman_bound: bound.to_string(),
        example2_huffman_feasible: validation.is_feasible(),
        example2_violation: validation.violations.first().cloned(),
        example2_feasible_optimum: opt2.expected_len.to_string(),
        example2_optimum_exceeds_bound: opt2.expected_len > bound,
    };

    let rows = vec![
        row(&[&"1", &"huffman", &report.example1_huffman]),
        row(&[&"1", &"optimum", &report.example1_optimum]),
        row(&[&"2", &"huffman_bound", &report.example2_huffman_bound]),
        row(&[&"2", &"huffman_feasible", &report.example2_huffman_feasible]),
        row(&[&"2", &"feasible_optimum", &report.example2_feasible_optimum]),
    ];
    out.table("wine", &["example", "quantity", "value"], &rows)?;
    out.tree("example1_optimal_tree.json", &opt1.tree, &DecisionSet::Unconstrained)?;
    out.tree("example2_optimal_tree.json", &opt2.tree, &pairs)?;
    Ok(report)
}

fn ratio_f64(s: &str) -> f64 {
    match s.split_once('/') {
        Some((a, b)) => a.parse::<f64>().unwrap_or(f64::NAN) / b.parse::<f64>().unwrap_or(f64::NAN),
        None => s.parse().unwrap_or(f64::NAN),
    }
}

impl fmt::Display for WineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Example 1: one bad bottle, p = ({})", self.example1_probs.join(", "))?;
        writeln!(
            f,
            "  Huffman expected tastings     {} ≈ {:.5}",
            self.example1_huffman,
            ratio_f64(&self.example1_huffman)
        )?;
        writeln!(
            f,
            "  optimal (exhaustive search)   {} ≈ {:.5}",
            self.example1_optimum,
            ratio_f64(&self.example1_optimum)
        )?;
        writeln!(f, "Example 2: two bad bottles, p(12,13,14,23,24,34) = ({})", self.example2_probs.join(", "))?;
        writeln!(
            f,
            "  Huffman bound                 {} ≈ {:.5}",
            self.example2_huffman_bound,
            ratio_f64(&self.example2_huffman_bound)
        )?;
        match &self.example2_violation {
            Some(v) => {
                let path = if v.path.is_empty() { "root".to_string() } else { v.path.clone() };
                writeln!(
                    f,
                    "  Huffman tree is INFEASIBLE: at {path}, no tasting separates {:?} from the rest of {:?}",
                    v.query.as_slice(),
                    v.candidates.as_slice()
                )?;
            }
            None => writeln!(f, "  Huffman tree is feasible")?,
        }
        writeln!(
            f,
            "  feasible optimum (tastings)   {} ≈ {:.5} ({} the bound)",
            self.example2_feasible_optimum,
            ratio_f64(&self.example2_feasible_optimum),
            if self.example2_optimum_exceeds_bound { "exceeds" } else { "equals" }
        )
    }
}

// ---------------------------------------------------------------------------
// codes

#[derive(Debug, Clone, Serialize)]
pub struct CodesReport {
    pub n: usize,
    pub entropy: f64,
    pub huffman: f64,
    pub gbsc: f64,
    pub shannon: f64,
    /// `(name, holds)` for each bound in the chain.
    pub checks: Vec<(String, bool)>,
}

impl CodesReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Entropy and the three unconstrained code lengths of `d`.
pub fn codes_report(d: &Distribution, out: &Output) -> Result<CodesReport> {
    let h = entropy(d);
    let huff = huffman_tree(d);
    let huffman = huff.expected_depth(d)?;
    let g = gbsc(d, &DecisionSet::Unconstrained)?;
    let shannon = shannon_length(d);
    let le = |a: f64, b: f64| a <= b + FLOAT_TOL;
    let checks = vec![
        ("H <= Huffman".to_string(), le(h, huffman)),
        ("Huffman <= GBSC".to_string(), le(huffman, g.expected_len)),
        ("GBSC <= Shannon".to_string(), le(g.expected_len, shannon)),
        ("GBSC < H + 1".to_string(), g.expected_len < h + 1.0 + FLOAT_TOL),
    ];
    let report = CodesReport { n: d.len(), entropy: h, huffman, gbsc: g.expected_len, shannon, checks };

    let mut rows = vec![
        row(&[&"entropy", &report.entropy]),
        row(&[&"huffman", &report.huffman]),
        row(&[&"gbsc", &report.gbsc]),
        row(&[&"shannon", &report.shannon]),
    ];
    rows.extend(report.checks.iter().map(|(name, ok)| row(&[name, ok])));
    out.table("codes", &["quantity", "value"], &rows)?;
    out.tree("huffman_tree.json", &huff, &DecisionSet::Unconstrained)?;
    out.tree("gbsc_tree.json", &g.tree, &DecisionSet::Unconstrained)?;
    Ok(report)
}

pub fn cmd_codes(path: &Path, out: &Output) -> Result<CodesReport> {
    codes_report(&Distribution::load(path)?, out)
}

impl fmt::Display for CodesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "  entropy  {:.4}", self.entropy)?;
        writeln!(f, "  Huffman  {:.4}", self.huffman)?;
        writeln!(f, "  GBSC     {:.4}", self.gbsc)?;
        writeln!(f, "  Shannon  {:.4}", self.shannon)?;
        for (name, ok) in &self.checks {
            writeln!(f, "  {:<16} {}", name, if *ok { "ok" } else { "VIOLATED" })?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// dna-compare

#[derive(Debug, Clone)]
pub struct DnaCompareConfig {
    pub compare: CompareConfig,
    /// Alphabet sizes for the runtime sweep; empty skips it.
    pub sweep_sizes: Vec<usize>,
    pub sweep_seeds: usize,
    /// Fill the per-instance timing columns. Off by default so that the
    /// same command line reproduces the same bytes.
    pub timings: bool,
}

impl Default for DnaCompareConfig {
    fn default() -> Self {
        DnaCompareConfig {
            compare: CompareConfig::default(),
            sweep_sizes: Vec::new(),
            sweep_seeds: 100,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub points: Vec<RuntimePoint>,
    /// R² of the least-squares line through GBSC's mean times.
    pub gbsc_linear_r2: f64,
    /// Mean time at the largest size over the smallest.
    pub gbsc_growth: f64,
    pub greedy_growth: f64,
}

impl SweepReport {
    pub fn from_points(points: Vec<RuntimePoint>) -> Self {
        let xs: Vec<f64> = points.iter().map(|p| p.n as f64).collect();
        let ys: Vec<f64> = points.iter().map(|p| p.mean_gbsc_ns).collect();
        let growth = |f: fn(&RuntimePoint) -> f64| match (points.first(), points.last()) {
            (Some(a), Some(b)) => f(b) / f(a),
            _ => f64::NAN,
        };
        SweepReport {
            gbsc_linear_r2: linear_r_squared(&xs, &ys),
            gbsc_growth: growth(|p| p.mean_gbsc_ns),
            greedy_growth: growth(|p| p.mean_greedy_ns),
            points,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DnaCompareReport {
    pub n: usize,
    pub seed: u64,
    pub summary: CompareSummary,
    pub sweep: Option<SweepReport>,
}

pub fn cmd_dna_compare(cfg: &DnaCompareConfig, out: &Output) -> Result<DnaCompareReport> {
    let records = run_compare(&cfg.compare)?;
    let summary = summarize(&records);

    match out.format {
        Format::Json => {
            let mut lines = String::new();
            for r in &records {
                let mut v = serde_json::to_value(r)?;
                if !cfg.timings {
                    if let Some(o) = v.as_object_mut() {
                        o.remove("t_huffman_ns");
                        o.remove("t_gbsc_ns");
                    }
                }
                lines += &(serde_json::to_string(&v)? + "\n");
            }
            out.write("dna.jsonl", &lines)?;
        }
        _ => {
            let mut buf = Vec::new();
            experiment::write_csv(&mut buf, &records, cfg.timings)?;
            out.write("dna.csv", &String::from_utf8(buf).expect("CSV is ASCII"))?;
        }
    }
    let s = &summary;
    out.table(
        "summary",
        &["quantity", "value"],
        &[
            row(&[&"instances", &s.instances]),
            row(&[&"greedy_failures", &s.greedy_failures]),
            row(&[&"zero_gap_fraction", &s.zero_gap_fraction]),
            row(&[&"median_gap", &s.median_gap]),
            row(&[&"p90_gap", &s.p90_gap]),
            row(&[&"max_gap", &s.max_gap]),
            row(&[&"mean_gbsc_minus_greedy", &s.mean_gbsc_minus_greedy]),
        ],
    )?;

    let sweep = if cfg.sweep_sizes.is_empty() {
        None
    } else {
        let points = runtime_sweep(&cfg.sweep_sizes, cfg.sweep_seeds, cfg.compare.seed, cfg.compare.greedy)?;
        let rows: Vec<Vec<String>> =
            points.iter().map(|p| row(&[&p.n, &p.mean_gbsc_ns, &p.mean_greedy_ns, &p.greedy_failures])).collect();
        out.table("sweep", &["n", "mean_gbsc_ns", "mean_greedy_ns", "greedy_failures"], &rows)?;
        if out.plots() {
            let series = |name: &str, f: fn(&RuntimePoint) -> f64| {
                Series::new(name, points.iter().map(|p| (p.n as f64, f(p) / 1e3)).collect())
            };
            let svg = plot::line_chart(
                "Mean solve time vs. sequence length",
                "n",
                "time (µs)",
                &[series("GBSC", |p| p.mean_gbsc_ns), series("greedy Huffman", |p| p.mean_greedy_ns)],
            );
            out.write("sweep.svg", &svg)?;
        }
        Some(SweepReport::from_points(points))
    };
    Ok(DnaCompareReport { n: cfg.compare.n, seed: cfg.compare.seed, summary, sweep })
}

impl fmt::Display for DnaCompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.summary;
        writeln!(f, "n = {}, {} instances, seed {}", self.n, s.instances, self.seed)?;
        writeln!(f, "  greedy Huffman at the optimum  {:.1}%", 100.0 * s.zero_gap_fraction)?;
        writeln!(f, "  gap median / p90 / max         {:.4} / {:.4} / {:.4}", s.median_gap, s.p90_gap, s.max_gap)?;
        writeln!(f, "  mean L_gbsc - L_greedy         {:+.4}", s.mean_gbsc_minus_greedy)?;
        writeln!(f, "  greedy failures                {}", s.greedy_failures)?;
        writeln!(f, "  mean time greedy / GBSC        {:.0} ns / {:.0} ns", s.mean_t_huffman_ns, s.mean_t_gbsc_ns)?;
        if let Some(sw) = &self.sweep {
            writeln!(f, "runtime sweep (mean of fastest-of-{} runs)", experiment::SWEEP_TIMING_REPEATS)?;
            writeln!(f, "  {:>4} {:>12} {:>14} {:>8}", "n", "GBSC ns", "greedy ns", "failed")?;
            for p in &sw.points {
                writeln!(
                    f,
                    "  {:>4} {:>12.0} {:>14.0} {:>8}",
                    p.n, p.mean_gbsc_ns, p.mean_greedy_ns, p.greedy_failures
                )?;
            }
            writeln!(f, "  GBSC linear fit R² = {:.3}", sw.gbsc_linear_r2)?;
            writeln!(f, "  growth largest/smallest: GBSC {:.1}x, greedy {:.1}x", sw.gbsc_growth, sw.greedy_growth)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// battleship

#[derive(Debug, Clone)]
pub struct BattleshipConfig {
    pub board: BoardConfig,
    pub games: usize,
    pub seed: u64,
}

impl Default for BattleshipConfig {
    fn default() -> Self {
        BattleshipConfig { board: BoardConfig::default(), games: 1000, seed: sampling::DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub board: BoardConfig,
    pub seed: u64,
    pub raw_layouts: u64,
    pub distinct_boards: usize,
    pub initial_entropy_bits: f64,
    /// `⌈log2 raw_layouts⌉`: the ideal average with one bit per query.
    pub query_floor: u32,
    pub games: usize,
    pub mean: f64,
    pub stddev: f64,
    pub min: usize,
    pub max: usize,
    pub histogram: Vec<(usize, usize)>,
    pub enumerate_secs: f64,
    pub play_secs: f64,
    #[serde(skip)]
    pub transcripts: Vec<GameTranscript>,
}

fn layout_floor(raw_layouts: u64) -> u32 {
    (raw_layouts as f64).log2().ceil() as u32
}

fn trace_rows(game_id: usize, t: &GameTranscript) -> impl Iterator<Item = Vec<String>> + '_ {
    t.entropy_trace().into_iter().enumerate().map(move |(step, h)| row(&[&game_id, &step, &h]))
}

fn trace_chart(title: &str, games: &[GameTranscript], floor: u32) -> String {
    let mut series: Vec<Series> = games
        .iter()
        .enumerate()
        .map(|(g, t)| {
            let pts = t.entropy_trace().into_iter().enumerate().map(|(i, h)| (i as f64, h)).collect();
            Series::new(format!("game {g}"), pts)
        })
        .collect();
    if let Some(t) = games.first() {
        series.push(
            Series::new(format!("ideal ({floor} queries)"), vec![(0.0, t.initial_entropy_bits), (floor as f64, 0.0)])
                .dashed(),
        );
    }
    plot::line_chart(title, "queries", "log2 |remaining layouts| (bits)", &series)
}

pub fn cmd_battleship_bench(cfg: &BattleshipConfig, out: &Output) -> Result<BenchReport> {
    let t0 = Instant::now();
    let set = enumerate_boards(&cfg.board)?;
    let enumerate_secs = t0.elapsed().as_secs_f64();
    let t1 = Instant::now();
    let stats = run_experiment(&set, cfg.games, cfg.seed)?;
    let play_secs = t1.elapsed().as_secs_f64();
    let counts = stats.query_counts();
    let floor = layout_floor(stats.raw_layouts);

    let report = BenchReport {
        board: cfg.board.clone(),
        seed: cfg.seed,
        raw_layouts: stats.raw_layouts,
        distinct_boards: stats.boards,
        initial_entropy_bits: (stats.raw_layouts as f64).log2(),
        query_floor: floor,
        games: counts.len(),
        mean: stats.mean,
        stddev: stats.stddev,
        min: counts.iter().copied().min().unwrap_or(0),
        max: counts.iter().copied().max().unwrap_or(0),
        histogram: stats.histogram.clone(),
        enumerate_secs,
        play_secs,
        transcripts: stats.games.clone(),
    };

    let games: Vec<Vec<String>> =
        stats.targets.iter().zip(&counts).enumerate().map(|(g, (target, q))| row(&[&g, target, q])).collect();
    out.table("games", &["game_id", "target_index", "queries"], &games)?;
    let w = crate::battleship::HISTOGRAM_BIN_WIDTH;
    let hist: Vec<Vec<String>> = stats.histogram.iter().map(|&(lo, k)| row(&[&lo, &(lo + w), &k])).collect();
    out.table("histogram", &["bin_lo", "bin_hi", "count"], &hist)?;
    out.table(
        "stats",
        &["quantity", "value"],
        &[
            row(&[&"raw_layouts", &report.raw_layouts]),
            row(&[&"distinct_boards", &report.distinct_boards]),
            row(&[&"initial_entropy_bits", &report.initial_entropy_bits]),
            row(&[&"query_floor", &report.query_floor]),
            row(&[&"games", &report.games]),
            row(&[&"mean", &report.mean]),
            row(&[&"stddev", &report.stddev]),
            row(&[&"min", &report.min]),
            row(&[&"max", &report.max]),
        ],
    )?;
    if out.format != Format::Json {
        let traces: Vec<Vec<String>> = stats.games.iter().enumerate().flat_map(|(g, t)| trace_rows(g, t)).collect();
        out.table("traces", &["game_id", "t", "entropy_bits"], &traces)?;
    }
    let jsonl: String = stats.games.iter().map(|t| t.to_json_line() + "\n").collect();
    out.write("transcripts.jsonl", &jsonl)?;
    if out.plots() {
        out.write(
            "histogram.svg",
            &plot::histogram("Queries to determine the target board", "queries", &stats.histogram, w),
        )?;
        let shown = &stats.games[..stats.games.len().min(10)];
        out.write("traces.svg", &trace_chart("Entropy of the remaining layouts", shown, floor))?;
    }
    Ok(report)
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.board;
        writeln!(f, "{}x{} board, ships {:?}", b.rows, b.cols, b.ships)?;
        writeln!(f, "  layouts                 {} ({} distinct grids)", self.raw_layouts, self.distinct_boards)?;
        writeln!(f, "  initial entropy         {:.2} bits", self.initial_entropy_bits)?;
        writeln!(f, "  theoretical floor       {} queries", self.query_floor)?;
        writeln!(f, "  games                   {} (seed {})", self.games, self.seed)?;
        writeln!(f, "  mean queries            {:.3}", self.mean)?;
        writeln!(f, "  standard deviation      {:.3}", self.stddev)?;
        writeln!(f, "  range                   {}..={}", self.min, self.max)?;
        writeln!(f, "  time                    {:.2} s enumerate, {:.2} s play", self.enumerate_secs, self.play_secs)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PlayReport {
    pub board: BoardConfig,
    pub target_seed: u64,
    pub target_index: usize,
    pub target: String,
    pub query_floor: u32,
    pub transcript: GameTranscript,
}

/// One game against the board drawn by `target_seed`.
pub fn cmd_battleship_play(board: &BoardConfig, target_seed: u64, out: &Output) -> Result<PlayReport> {
    let set = enumerate_boards(board)?;
    let target_index = sampling::rng(target_seed).random_range(0..set.len());
    let target: Board = set.boards()[target_index];
    let transcript = play_game(target, &set)?;
    let floor = layout_floor(set.raw_layouts);

    out.write("transcript.jsonl", &(transcript.to_json_line() + "\n"))?;
    if out.format != Format::Json {
        out.table("trace", &["game_id", "t", "entropy_bits"], &trace_rows(0, &transcript).collect::<Vec<_>>())?;
    }
    if out.plots() {
        out.write(
            "trace.svg",
            &trace_chart("Entropy of the remaining layouts", std::slice::from_ref(&transcript), floor),
        )?;
    }
    Ok(PlayReport {
        board: board.clone(),
        target_seed,
        target_index,
        target: target.render(board),
        query_floor: floor,
        transcript,
    })
}

impl fmt::Display for PlayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "target #{} (target seed {}):", self.target_index, self.target_seed)?;
        for line in self.target.lines() {
            writeln!(f, "  {line}")?;
        }
        let t = &self.transcript;
        writeln!(f, "{:>5} {:>9} {:>5} {:>12} {:>8}", "step", "cell", "hit", "layouts", "bits")?;
        writeln!(f, "{:>5} {:>9} {:>5} {:>12} {:>8.3}", 0, "", "", t.initial_layouts, t.initial_entropy_bits)?;
        for (i, s) in t.steps.iter().enumerate() {
            writeln!(
                f,
                "{:>5} {:>9} {:>5} {:>12} {:>8.3}",
                i + 1,
                format!("({},{})", s.query.0, s.query.1),
                if s.hit { "hit" } else { "miss" },
                s.remaining_layouts,
                s.entropy_bits
            )?;
        }
        writeln!(f, "determined after {} queries (floor {})", t.total_queries, self.query_floor)
    }
}
