//! Brute force vs. greedy merging vs. GBSC on random range-query instances.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::decision_set::DecisionSet;
use crate::error::Result;
use crate::sampling::{instance_seed, random_distribution};
use crate::solvers::{brute_force_optimal, GreedyOptions, BRUTE_FORCE_MAX_N};

use super::{dna_gbsc, dna_greedy_huffman};

/// Relative gaps at or below this count as "optimal".
pub const ZERO_GAP_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct CompareConfig {
    pub n: usize,
    pub instances: usize,
    pub seed: u64,
    /// Skip the exact solver (required above [`BRUTE_FORCE_MAX_N`]).
    pub brute_force: bool,
    pub greedy: GreedyOptions,
    /// Each heuristic is run this many times per instance and the fastest
    /// run is recorded, which keeps one preempted run from skewing a mean.
    pub timing_repeats: usize,
}

impl Default for CompareConfig {
    fn default() -> Self {
        CompareConfig {
            n: 6,
            instances: 10_000,
            seed: crate::sampling::DEFAULT_SEED,
            brute_force: true,
            greedy: GreedyOptions::default(),
            timing_repeats: 1,
        }
    }
}

/// Runs `f` `repeats` times (at least once); returns the last result and
/// the fastest wall time.
fn fastest<T>(repeats: usize, mut f: impl FnMut() -> T) -> (T, u64) {
    let mut best = u64::MAX;
    let mut out = None;
    for _ in 0..repeats.max(1) {
        let t = Instant::now();
        out = Some(f());
        best = best.min(t.elapsed().as_nanos() as u64);
    }
    (out.expect("ran at least once"), best)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DnaRecord {
    pub instance_id: u64,
    pub n: usize,
    pub l_brute: Option<f64>,
    /// `None` when the greedy search gave up.
    pub l_huffman_greedy: Option<f64>,
    pub l_gbsc: f64,
    /// `(L_greedy - L_brute) / L_brute`; zero when both lengths are zero.
    pub gap: Option<f64>,
    pub t_huffman_ns: u64,
    pub t_gbsc_ns: u64,
}

pub fn run_instance(cfg: &CompareConfig, instance_id: u64) -> Result<DnaRecord> {
    let d = random_distribution(cfg.n, instance_seed(cfg.seed, instance_id));
    let l_brute = if cfg.brute_force && cfg.n <= BRUTE_FORCE_MAX_N {
        Some(brute_force_optimal(&d, &DecisionSet::Interval(cfg.n))?.expected_len)
    } else {
        None
    };
    let (greedy, t_huffman_ns) = fastest(cfg.timing_repeats, || dna_greedy_huffman(&d, cfg.greedy));
    let l_huffman_greedy = match greedy {
        Ok(r) => Some(r.expected_len),
        Err(e) if e.is_infeasible() => None,
        Err(e) => return Err(e),
    };
    let (gbsc, t_gbsc_ns) = fastest(cfg.timing_repeats, || dna_gbsc(&d));
    let l_gbsc = gbsc?.expected_len;
    let gap = match (l_brute, l_huffman_greedy) {
        (Some(b), Some(g)) if b > 0.0 => Some((g - b) / b),
        (Some(_), Some(_)) => Some(0.0),
        _ => None,
    };
    Ok(DnaRecord { instance_id, n: cfg.n, l_brute, l_huffman_greedy, l_gbsc, gap, t_huffman_ns, t_gbsc_ns })
}

/// Runs every instance; records come back ordered by `instance_id`.
pub fn run_compare(cfg: &CompareConfig) -> Result<Vec<DnaRecord>> {
    (0..cfg.instances as u64).into_par_iter().map(|i| run_instance(cfg, i)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareSummary {
    pub instances: usize,
    pub greedy_failures: usize,
    pub zero_gap_fraction: f64,
    pub median_gap: f64,
    pub p90_gap: f64,
    pub max_gap: f64,
    pub mean_gbsc_minus_greedy: f64,
    pub mean_t_huffman_ns: f64,
    pub mean_t_gbsc_ns: f64,
}

/// Nearest-rank quantile of sorted data.
pub fn quantile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

pub fn summarize(records: &[DnaRecord]) -> CompareSummary {
    let mut gaps: Vec<f64> = records.iter().filter_map(|r| r.gap).collect();
    gaps.sort_by(f64::total_cmp);
    let zero = gaps.iter().filter(|&&g| g <= ZERO_GAP_TOL).count();
    let paired: Vec<f64> = records.iter().filter_map(|r| r.l_huffman_greedy.map(|g| r.l_gbsc - g)).collect();
    let mean = |xs: &mut dyn Iterator<Item = f64>| {
        let (s, c) = xs.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
        if c == 0 {
            f64::NAN
        } else {
            s / c as f64
        }
    };
    CompareSummary {
        instances: records.len(),
        greedy_failures: records.iter().filter(|r| r.l_huffman_greedy.is_none()).count(),
        zero_gap_fraction: if gaps.is_empty() { f64::NAN } else { zero as f64 / gaps.len() as f64 },
        median_gap: quantile(&gaps, 0.5),
        p90_gap: quantile(&gaps, 0.9),
        max_gap: gaps.last().copied().unwrap_or(f64::NAN),
        mean_gbsc_minus_greedy: mean(&mut paired.into_iter()),
        mean_t_huffman_ns: mean(&mut records.iter().map(|r| r.t_huffman_ns as f64)),
        mean_t_gbsc_ns: mean(&mut records.iter().map(|r| r.t_gbsc_ns as f64)),
    }
}

pub const CSV_HEADER: &str = "instance_id,n,L_brute,L_huffman_greedy,L_gbsc,gap,t_huffman_ns,t_gbsc_ns";

/// Writes the per-instance CSV. With `timings == false` the two timing
/// columns are left empty so output depends only on the seed.
pub fn write_csv<W: Write>(mut w: W, records: &[DnaRecord], timings: bool) -> std::io::Result<()> {
    fn opt(v: Option<f64>) -> String {
        v.map(|x| x.to_string()).unwrap_or_default()
    }
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        let (th, tg) = if timings {
            (r.t_huffman_ns.to_string(), r.t_gbsc_ns.to_string())
        } else {
            (String::new(), String::new())
        };
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            r.instance_id,
            r.n,
            opt(r.l_brute),
            opt(r.l_huffman_greedy),
            r.l_gbsc,
            opt(r.gap),
            th,
            tg
        )?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuntimePoint {
    pub n: usize,
    pub mean_gbsc_ns: f64,
    pub mean_greedy_ns: f64,
    pub greedy_failures: usize,
}

/// Repeats per instance in [`runtime_sweep`].
pub const SWEEP_TIMING_REPEATS: usize = 3;

/// Mean solve times of both heuristics per alphabet size (each instance's
/// time is its fastest of [`SWEEP_TIMING_REPEATS`] runs). Runs sequentially
/// so the timings do not contend with each other.
pub fn runtime_sweep(
    sizes: &[usize],
    seeds: usize,
    master_seed: u64,
    greedy: GreedyOptions,
) -> Result<Vec<RuntimePoint>> {
    sizes
        .iter()
        .map(|&n| {
            let cfg = CompareConfig {
                n,
                instances: seeds,
                seed: master_seed,
                brute_force: false,
                greedy,
                timing_repeats: SWEEP_TIMING_REPEATS,
            };
            let records: Vec<DnaRecord> = (0..seeds as u64).map(|i| run_instance(&cfg, i)).collect::<Result<_>>()?;
            let s = summarize(&records);
            Ok(RuntimePoint {
                n,
                mean_gbsc_ns: s.mean_t_gbsc_ns,
                mean_greedy_ns: s.mean_t_huffman_ns,
                greedy_failures: s.greedy_failures,
            })
        })
        .collect()
}

/// Coefficient of determination of the least-squares line through the
/// points.
pub fn linear_r_squared(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 || syy == 0.0 {
        return 1.0;
    }
    sxy * sxy / (sxx * syy)
}
