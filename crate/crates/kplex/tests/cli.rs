//! Black-box tests of the command-line binary: output format, exit codes,
//! parser behavior, and the JSON report.

mod common;

use std::io::Write;
use std::process::Command;

use common::gnp;
use kplex::graph::Graph;
use kplex::io::to_dimacs;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kplex"))
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn oracle_mode_on_k5() {
    let f = write_temp(&to_dimacs(&Graph::complete(5)));
    let out = bin()
        .args(["--graph"])
        .arg(f.path())
        .args(["--k", "2", "--mode", "oracle", "--quiet"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("5"));
    assert_eq!(lines.next(), Some("1 2 3 4 5")); // DIMACS labels
}

#[test]
fn k_below_two_is_a_usage_error() {
    let f = write_temp(&to_dimacs(&Graph::complete(4)));
    let out = bin()
        .args(["--graph"])
        .arg(f.path())
        .args(["--k", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_mode_is_a_usage_error() {
    let f = write_temp(&to_dimacs(&Graph::complete(4)));
    let out = bin()
        .args(["--graph"])
        .arg(f.path())
        .args(["--k", "2", "--mode", "bogus"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_graph_is_a_parse_error() {
    let f = write_temp("p edge 3 1\ne 1 99\n");
    let out = bin()
        .args(["--graph"])
        .arg(f.path())
        .args(["--k", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exact_modes_agree_via_cli() {
    let g = gnp(42, 14, 0.5);
    let f = write_temp(&to_dimacs(&g));
    let mut sizes = Vec::new();
    for mode in ["exact-altrb", "exact-seqrb"] {
        let out = bin()
            .args(["--graph"])
            .arg(f.path())
            .args(["--k", "2", "--mode", mode, "--quiet"])
            .output()
            .unwrap();
        assert!(out.status.success());
        let stdout = String::from_utf8(out.stdout).unwrap();
        sizes.push(stdout.lines().next().unwrap().to_string());
    }
    assert_eq!(sizes[0], sizes[1]);
}

#[test]
fn stats_json_has_required_keys() {
    let g = gnp(7, 12, 0.5);
    let f = write_temp(&to_dimacs(&g));
    let json_out = tempfile::NamedTempFile::new().unwrap();
    let out = bin()
        .args(["--graph"])
        .arg(f.path())
        .args([
            "--k",
            "3",
            "--mode",
            "exact-altrb",
            "--quiet",
            "--stats-json",
        ])
        .arg(json_out.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(json_out.path()).unwrap()).unwrap();
    for key in [
        "n",
        "m",
        "k",
        "mode",
        "status",
        "size",
        "branches",
        "mean_r",
        "lb_initial",
        "lb_final",
        "t_heuristic_ms",
        "t_reduce_ms",
        "t_search_ms",
        "t_total_ms",
    ] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(v["n"], 12);
    assert_eq!(v["k"], 3);
    assert_eq!(v["mode"], "exact-altrb");
}

#[test]
fn edge_list_input_round_trips_labels() {
    // Labels not starting at 0 must come back verbatim on stdout.
    let f = write_temp("# toy graph\n10 11\n11 12\n12 10\n10 13\n11 13\n12 13\n");
    let out = bin()
        .args(["--graph"])
        .arg(f.path())
        .args(["--k", "2", "--quiet"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("4"));
    assert_eq!(lines.next(), Some("10 11 12 13"));
}

#[test]
fn heuristic_mode_reports_a_valid_kplex() {
    let g = gnp(99, 20, 0.5);
    let f = write_temp(&to_dimacs(&g));
    let out = bin()
        .args(["--graph"])
        .arg(f.path())
        .args(["--k", "2", "--mode", "heuristic", "--quiet"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    let size: usize = lines.next().unwrap().parse().unwrap();
    let labels: Vec<usize> = lines
        .next()
        .unwrap()
        .split_whitespace()
        .map(|t| t.parse::<usize>().map(|x| x - 1).unwrap()) // DIMACS 1-indexed
        .collect();
    assert_eq!(labels.len(), size);
    if size > 0 {
        let s = kplex::bitset::VertexSet::from_iter(g.n(), labels);
        assert!(g.is_kplex(&s, 2));
    }
}
