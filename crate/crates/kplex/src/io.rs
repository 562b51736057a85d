//! Graph file parsing (DIMACS and whitespace edge lists) and the JSON run
//! report written by the CLI.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::search::{Solution, SolverConfig};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

fn malformed(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        msg: msg.into(),
    }
}

/// Load a graph, auto-detecting the format: DIMACS if a `p` line appears
/// before any edge, plain edge list otherwise.
pub fn read_graph(path: &Path) -> Result<Graph, ParseError> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') && line.split_whitespace().next() == Some("c") {
            continue;
        }
        return if line.starts_with("p ") || line.starts_with("p\t") {
            parse_dimacs(text)
        } else {
            parse_edge_list(text)
        };
    }
    // An empty file is an empty graph.
    Ok(Graph::from_edges(0, []))
}

/// DIMACS: `c` comments, one `p edge n m` line, then `e u v` lines with
/// 1-indexed endpoints.
fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(malformed(lineno, "duplicate problem line"));
                }
                let _fmt = tok
                    .next()
                    .ok_or_else(|| malformed(lineno, "missing format"))?;
                let nv: usize = tok
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| malformed(lineno, "bad vertex count"))?;
                let _me: usize = tok
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| malformed(lineno, "bad edge count"))?;
                n = Some(nv);
            }
            Some("e") => {
                let nv = n.ok_or_else(|| malformed(lineno, "edge before problem line"))?;
                let u: usize = tok
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| malformed(lineno, "bad endpoint"))?;
                let v: usize = tok
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| malformed(lineno, "bad endpoint"))?;
                if u < 1 || v < 1 || u > nv || v > nv {
                    return Err(malformed(lineno, "endpoint out of range"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(malformed(lineno, format!("unknown record '{other}'"))),
            None => continue,
        }
    }
    let n = n.ok_or_else(|| malformed(0, "missing problem line"))?;
    let labels: Vec<u64> = (1..=n as u64).collect();
    Ok(Graph::with_labels(labels, edges))
}

/// Edge list: `#`/`%` comments; an optional `a b` header is recognized when
/// exactly `b` data lines follow and every label is below `a` (then vertices
/// are `0..a`); otherwise distinct labels are mapped to ids in sorted order.
fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut rows: Vec<(usize, u64, u64)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut tok = line.split_whitespace();
        let a: u64 = tok
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| malformed(idx + 1, "expected two integers"))?;
        let b: u64 = tok
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| malformed(idx + 1, "expected two integers"))?;
        if tok.next().is_some() {
            return Err(malformed(idx + 1, "expected exactly two integers"));
        }
        rows.push((idx + 1, a, b));
    }
    if rows.is_empty() {
        return Ok(Graph::from_edges(0, []));
    }
    // Header heuristic: first row (n, m) with m matching the remaining row
    // count and every label < n.
    let (_, h_n, h_m) = rows[0];
    let body = &rows[1..];
    let header_fits =
        h_m as usize == body.len() && body.iter().all(|&(_, u, v)| u < h_n && v < h_n);
    let (edges, labels) = if header_fits {
        let n = h_n as usize;
        let edges: Vec<(usize, usize)> = body
            .iter()
            .map(|&(_, u, v)| (u as usize, v as usize))
            .collect();
        (edges, (0..n as u64).collect::<Vec<u64>>())
    } else {
        let mut labels: BTreeSet<u64> = BTreeSet::new();
        for &(_, u, v) in &rows {
            labels.insert(u);
            labels.insert(v);
        }
        let labels: Vec<u64> = labels.into_iter().collect();
        let id_of = |x: u64| labels.binary_search(&x).unwrap();
        let edges: Vec<(usize, usize)> =
            rows.iter().map(|&(_, u, v)| (id_of(u), id_of(v))).collect();
        (edges, labels)
    };
    Ok(Graph::with_labels(labels, edges))
}

/// Machine-readable summary of one solver run.
#[derive(Serialize)]
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub mode: &'static str,
    pub status: &'static str,
    pub size: usize,
    pub branches: u64,
    pub mean_r: f64,
    pub lb_initial: usize,
    pub lb_final: usize,
    pub t_heuristic_ms: f64,
    pub t_reduce_ms: f64,
    pub t_search_ms: f64,
    pub t_total_ms: f64,
    pub solution: Vec<u64>,
    pub rr1_removed: u64,
    pub rr2_moved: u64,
    pub prefilter_removed: u64,
    pub ctcp_vertices_removed: u64,
    pub ctcp_edges_removed: u64,
}

impl RunReport {
    pub fn new(g: &Graph, cfg: &SolverConfig, sol: &Solution) -> RunReport {
        let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
        RunReport {
            n: g.n(),
            m: g.m(),
            k: cfg.k,
            mode: cfg.mode.as_str(),
            status: sol.status.as_str(),
            size: sol.size,
            branches: sol.stats.branches,
            mean_r: sol.stats.mean_altrb_iterations(),
            lb_initial: sol.stats.lb_initial,
            lb_final: sol.stats.lb_final,
            t_heuristic_ms: ms(sol.stats.t_heuristic),
            t_reduce_ms: ms(sol.stats.t_reduce),
            t_search_ms: ms(sol.stats.t_search),
            t_total_ms: ms(sol.stats.t_total),
            solution: sol.best_labels.clone(),
            rr1_removed: sol.stats.rr1_removed,
            rr2_moved: sol.stats.rr2_moved,
            prefilter_removed: sol.stats.prefilter_removed,
            ctcp_vertices_removed: sol.stats.ctcp_vertices_removed,
            ctcp_edges_removed: sol.stats.ctcp_edges_removed,
        }
    }
}

/// Render a graph in DIMACS form (useful for tests and round trips).
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
