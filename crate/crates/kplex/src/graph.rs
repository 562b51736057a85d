//! Immutable simple-graph store, degeneracy machinery and the k-plex predicate.

use std::collections::BTreeSet;

use crate::bitset::VertexSet;

/// A simple undirected graph with dense 0-based vertex ids and sorted
/// adjacency lists. Original input labels are kept for output.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    labels: Vec<u64>,
}

/// Result of the min-degree peel: the order itself and the degeneracy.
#[derive(Clone, Debug)]
pub struct DegeneracyResult {
    pub order: Vec<usize>,
    pub delta: usize,
}

impl DegeneracyResult {
    /// `position[v]` = index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

impl Graph {
    /// Build from an edge list over `0..n`. Self-loops and duplicate edges
    /// are silently dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        Graph::with_labels((0..n as u64).collect(), edges)
    }

    /// Build with explicit original labels; `labels[i]` is the input label
    /// of internal id `i`.
    pub fn with_labels(labels: Vec<u64>, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge endpoint out of range");
            if u == v {
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Graph {
            adj,
            m: m / 2,
            labels,
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Cycle on `n` vertices.
    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n.saturating_sub(1)).map(|u| (u, u + 1)))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn adj(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> u64 {
        self.labels[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    /// Min-degree peel. At each step the vertex of minimum degree in the
    /// remaining induced subgraph is removed, ties broken by smallest id.
    pub fn degeneracy_order(&self) -> DegeneracyResult {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
        let mut alive = vec![true; n];
        let mut order = Vec::with_capacity(n);
        let mut delta = 0;
        while let Some(&(d, v)) = queue.iter().next() {
            queue.remove(&(d, v));
            alive[v] = false;
            delta = delta.max(d);
            order.push(v);
            for &w in &self.adj[v] {
                if alive[w] {
                    queue.remove(&(deg[w], w));
                    deg[w] -= 1;
                    queue.insert((deg[w], w));
                }
            }
        }
        DegeneracyResult { order, delta }
    }

    /// True iff every vertex of `s` has at least `|s| - k` neighbors inside `s`.
    pub fn is_kplex(&self, s: &VertexSet, k: usize) -> bool {
        let size = s.len();
        for u in s.iter() {
            let deg_in = self.adj[u].iter().filter(|&&w| s.contains(w)).count();
            if deg_in + k < size {
                return false;
            }
        }
        true
    }

    /// Induced subgraph on `s`, plus the mapping from new ids to old ids
    /// (ascending in the old ids).
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.to_vec();
        let mut back = vec![usize::MAX; self.n()];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let labels: Vec<u64> = map.iter().map(|&old| self.labels[old]).collect();
        let mut edges = Vec::new();
        for (new_u, &old_u) in map.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if old_u < old_v && s.contains(old_v) {
                    edges.push((new_u, back[old_v]));
                }
            }
        }
        (Graph::with_labels(labels, edges), map)
    }

    /// `{v} ∪ N(v) ∪ N(N(v))`.
    pub fn two_hop_closure(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::new(self.n());
        s.insert(v);
        for &w in &self.adj[v] {
            s.insert(w);
            for &x in &self.adj[w] {
                s.insert(x);
            }
        }
        s
    }

    /// `|N(u) ∩ N(v)|` by sorted merge.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        debug_assert_ne!(u, v);
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }
}

/// Adjacency-matrix view of a (small) graph: one bitset row per vertex.
/// Built per working subgraph; all branch machinery runs on this.
pub struct BitGraph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl BitGraph {
    pub fn from_graph(g: &Graph) -> BitGraph {
        let n = g.n();
        let rows = (0..n)
            .map(|u| VertexSet::from_iter(n, g.adj(u).iter().copied()))
            .collect();
        BitGraph { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: usize) -> &VertexSet {
        &self.rows[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// `|N(v) ∩ set|`.
    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        self.rows[v].intersection_size(set)
    }

    /// `|N̄(v, set)|`: non-neighbors of `v` in `set`, counting `v` itself
    /// when `v ∈ set`.
    pub fn non_neighbors_in(&self, v: usize, set: &VertexSet) -> usize {
        set.len() - self.degree_in(v, set)
    }

    pub fn is_kplex(&self, s: &VertexSet, k: usize) -> bool {
        let size = s.len();
        s.iter().all(|u| self.degree_in(u, s) + k >= size)
    }
}
