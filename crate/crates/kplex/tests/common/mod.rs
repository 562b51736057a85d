//! Shared helpers for the integration suites: seeded random graphs and the
//! Johnson-scheme benchmark instance.
// Each test target compiles this module and uses a different subset.
#![allow(dead_code)]

use kplex::bitset::VertexSet;
use kplex::graph::{BitGraph, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi G(n, p) with a fixed seed.
pub fn gnp(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// johnson8-4-4: vertices are the 4-subsets of an 8-element ground set,
/// adjacent when the subsets share at most 2 elements. 70 vertices,
/// 1855 edges, 53-regular.
pub fn johnson8_4_4() -> Graph {
    let mut subsets: Vec<u32> = (0u32..256).filter(|s| s.count_ones() == 4).collect();
    subsets.sort_unstable();
    let n = subsets.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if (subsets[i] & subsets[j]).count_ones() <= 2 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Rebuild an adjacency-list graph from a bitset graph (for feeding branch
/// subgraphs back to the brute-force oracle).
pub fn graph_of(bg: &BitGraph) -> Graph {
    let n = bg.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in bg.row(u).iter() {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// A random k-plex grown greedily from a random vertex order.
pub fn random_kplex(g: &Graph, k: usize, rng: &mut ChaCha8Rng, max_size: usize) -> VertexSet {
    let bg = BitGraph::from_graph(g);
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut s = VertexSet::new(n);
    for &v in &order {
        if s.len() >= max_size {
            break;
        }
        let mut trial = s.clone();
        trial.insert(v);
        if bg.is_kplex(&trial, k) {
            s = trial;
        }
    }
    s
}
