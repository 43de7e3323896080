//! The `querytree` binary: exit codes, artifacts and reproducibility.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn querytree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_querytree")).args(args).output().expect("binary runs")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    let mut full = vec!["--out", dir.to_str().unwrap()];
    full.extend_from_slice(args);
    querytree(&full)
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(querytree(&["bogus"]).status.code(), Some(1));
    assert_eq!(querytree(&["--format", "xml", "wine"]).status.code(), Some(1));
    assert_eq!(querytree(&["codes", "/definitely/not/here.txt"]).status.code(), Some(1));
    assert_eq!(querytree(&["--help"]).status.code(), Some(0));
}

#[test]
fn impossible_board_exits_one() {
    let out = querytree(&["battleship", "play", "--rows", "2", "--cols", "2", "--ships", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn wine_writes_feasible_trees() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["wine"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("54/23"));
    for name in ["wine.csv", "example1_optimal_tree.json", "example2_optimal_tree.json"] {
        assert!(dir.path().join(name).is_file(), "{name} missing");
    }
}

#[test]
fn json_format_prints_json() {
    let out = querytree(&["--format", "json", "wine"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn codes_reads_a_distribution_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.txt");
    fs::write(&file, "# dyadic\n1/2\n1/4\n0.125\n0.125\n").unwrap();
    let out = run_in(dir.path(), &["codes", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("entropy  1.7500"), "{stdout}");
    assert!(dir.path().join("codes.csv").is_file());
}

#[test]
fn reruns_are_byte_identical() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = ["--seed", "7", "--format", "svg", "dna-compare", "--n", "5", "--instances", "200"];
    for dir in [&a, &b] {
        assert_eq!(run_in(dir.path(), &args).status.code(), Some(0));
    }
    let mut names: Vec<_> = fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(!names.is_empty());
    for name in names {
        let (x, y) = (fs::read(a.path().join(&name)).unwrap(), fs::read(b.path().join(&name)).unwrap());
        assert!(x == y, "{name:?} differs between runs");
    }
}

#[test]
fn battleship_commands_on_a_small_board() {
    let dir = tempfile::tempdir().unwrap();
    let board = ["--rows", "4", "--cols", "4", "--ships", "3,2"];
    let mut bench = vec!["--format", "svg", "battleship", "bench", "--games", "50"];
    bench.extend_from_slice(&board);
    assert_eq!(run_in(dir.path(), &bench).status.code(), Some(0));
    for name in ["histogram.svg", "traces.svg", "transcripts.jsonl"] {
        assert!(dir.path().join(name).is_file(), "{name} missing");
    }

    let mut play = vec!["battleship", "play", "--target-seed", "3"];
    play.extend_from_slice(&board);
    let first = querytree(&play);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, querytree(&play).stdout);
}
