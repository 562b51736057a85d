//! Core-pruning-first core-truss co-pruning.
//!
//! Shrinks the input graph to the unique maximal subgraph that is both a
//! `(tau_v+1)`-core and a `(tau_e+3)`-truss, with O(m) bookkeeping: one
//! triangle count per edge plus two timestamp arrays that let a removed
//! edge decide, at drain time, which surviving triangle counts it still
//! owes a decrement to.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Degree / triangle thresholds derived from the current lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thresholds {
    /// Remove vertices with degree <= tau_v (= lb - k).
    pub tau_v: i64,
    /// Remove edges with triangle count <= tau_e (= lb - 2k).
    pub tau_e: i64,
}

impl Thresholds {
    pub fn from_lb(lb: usize, k: usize) -> Thresholds {
        Thresholds {
            tau_v: lb as i64 - k as i64,
            tau_e: lb as i64 - 2 * k as i64,
        }
    }
}

/// Mutable reduction scratch over one immutable input graph.
pub struct ReductionState<'g> {
    g: &'g Graph,
    alive_v: Vec<bool>,
    alive_e: Vec<bool>,
    deg: Vec<usize>,
    /// Edge id of adj[u][i], parallel to the adjacency lists.
    eid: Vec<Vec<usize>>,
    ends: Vec<(usize, usize)>,
    /// Per-edge triangle count (valid once stamped).
    tri: Vec<usize>,
    /// Tick at which the triangle count was taken; 0 = not yet.
    t_counted: Vec<u64>,
    /// Tick at which the edge was removed; 0 = still alive.
    t_removed: Vec<u64>,
    tick: u64,
    materialized: bool,
    q_e: VecDeque<usize>,
    n_alive: usize,
    m_alive: usize,
    pub vertices_removed: usize,
    pub edges_removed: usize,
}

impl<'g> ReductionState<'g> {
    pub fn new(g: &'g Graph) -> ReductionState<'g> {
        let n = g.n();
        let mut eid = vec![Vec::new(); n];
        let mut ends = Vec::with_capacity(g.m());
        for u in 0..n {
            eid[u] = vec![usize::MAX; g.adj(u).len()];
        }
        // Dense edge ids in ascending (u, v) order with u < v.
        for u in 0..n {
            for (i, &v) in g.adj(u).iter().enumerate() {
                if u < v {
                    let e = ends.len();
                    ends.push((u, v));
                    eid[u][i] = e;
                    let j = g.adj(v).binary_search(&u).unwrap();
                    eid[v][j] = e;
                }
            }
        }
        let m = ends.len();
        ReductionState {
            g,
            alive_v: vec![true; n],
            alive_e: vec![true; m],
            deg: (0..n).map(|v| g.degree(v)).collect(),
            eid,
            ends,
            tri: vec![0; m],
            t_counted: vec![0; m],
            t_removed: vec![0; m],
            tick: 0,
            materialized: false,
            q_e: VecDeque::new(),
            n_alive: n,
            m_alive: m,
            vertices_removed: 0,
            edges_removed: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive_v[v]
    }

    pub fn is_edge_alive(&self, e: usize) -> bool {
        self.alive_e[e]
    }

    pub fn alive_degree(&self, v: usize) -> usize {
        self.deg[v]
    }

    pub fn alive_vertex_count(&self) -> usize {
        self.n_alive
    }

    pub fn alive_edge_count(&self) -> usize {
        self.m_alive
    }

    pub fn alive_vertices(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.alive_v[v]).collect()
    }

    pub fn alive_edges(&self) -> Vec<(usize, usize)> {
        (0..self.ends.len())
            .filter(|&e| self.alive_e[e])
            .map(|e| self.ends[e])
            .collect()
    }

    /// Alive neighbors of `v` through alive edges.
    pub fn alive_neighbors(&self, v: usize) -> Vec<usize> {
        self.g
            .adj(v)
            .iter()
            .zip(&self.eid[v])
            .filter(|&(_, &e)| self.alive_e[e])
            .map(|(&w, _)| w)
            .collect()
    }

    fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.g.adj(u).len() <= self.g.adj(v).len() {
            (u, v)
        } else {
            (v, u)
        };
        self.g.adj(a).binary_search(&b).ok().map(|i| self.eid[a][i])
    }

    fn next_tick(&mut self) -> u64 {
        self.tick += 1;
        self.tick
    }

    fn kill_edge(&mut self, e: usize, out: &mut Vec<usize>) {
        debug_assert!(self.alive_e[e]);
        self.alive_e[e] = false;
        self.t_removed[e] = self.next_tick();
        let (u, v) = self.ends[e];
        self.deg[u] -= 1;
        self.deg[v] -= 1;
        self.m_alive -= 1;
        self.edges_removed += 1;
        out.push(e);
    }

    fn kill_vertex(&mut self, v: usize, out: &mut Vec<usize>) {
        debug_assert!(self.alive_v[v]);
        let incident: Vec<usize> = self.eid[v]
            .iter()
            .copied()
            .filter(|&e| self.alive_e[e])
            .collect();
        for e in incident {
            self.kill_edge(e, out);
        }
        self.alive_v[v] = false;
        self.n_alive -= 1;
        self.vertices_removed += 1;
    }

    /// Iteratively delete every alive vertex with degree <= tau_v.
    /// Returns the edge ids removed along the way.
    pub fn core_prune(&mut self, tau_v: i64) -> Vec<usize> {
        let mut removed = Vec::new();
        if tau_v < 0 {
            return removed;
        }
        let mut queue: VecDeque<usize> = (0..self.g.n())
            .filter(|&v| self.alive_v[v] && (self.deg[v] as i64) <= tau_v)
            .collect();
        self.drain_core_queue(&mut queue, tau_v, &mut removed);
        removed
    }

    fn drain_core_queue(&mut self, queue: &mut VecDeque<usize>, tau_v: i64, out: &mut Vec<usize>) {
        while let Some(v) = queue.pop_front() {
            if !self.alive_v[v] || (self.deg[v] as i64) > tau_v {
                continue;
            }
            let before = out.len();
            self.kill_vertex(v, out);
            for &e in &out[before..] {
                let (a, b) = self.ends[e];
                let w = if a == v { b } else { a };
                if self.alive_v[w] && (self.deg[w] as i64) <= tau_v {
                    queue.push_back(w);
                }
            }
        }
    }

    /// Delete edge `e`, then core-prune. Returns `e` plus all cascades.
    pub fn remove_edge(&mut self, e: usize, tau_v: i64) -> Vec<usize> {
        let mut removed = Vec::new();
        self.kill_edge(e, &mut removed);
        if tau_v >= 0 {
            let (u, v) = self.ends[e];
            let mut queue: VecDeque<usize> = VecDeque::new();
            for x in [u, v] {
                if self.alive_v[x] && (self.deg[x] as i64) <= tau_v {
                    queue.push_back(x);
                }
            }
            self.drain_core_queue(&mut queue, tau_v, &mut removed);
        }
        removed
    }

    /// One invocation of the co-pruning pass. `q_v` are vertices to delete
    /// up front; `lb_changed` triggers the full edge rescan against `tau_e`.
    pub fn cf_ctcp(&mut self, q_v: &[usize], tau_v: i64, tau_e: i64, lb_changed: bool) {
        let mut removed = Vec::new();
        for &v in q_v {
            if self.alive_v[v] {
                self.kill_vertex(v, &mut removed);
            }
        }
        let mut queue: VecDeque<usize> = Vec::new().into();
        if tau_v >= 0 {
            queue = (0..self.g.n())
                .filter(|&v| self.alive_v[v] && (self.deg[v] as i64) <= tau_v)
                .collect();
        }
        self.drain_core_queue(&mut queue, tau_v, &mut removed);
        self.q_e.extend(removed.drain(..));

        if lb_changed {
            let first = !self.materialized;
            self.materialized = true;
            for e in 0..self.ends.len() {
                if !self.alive_e[e] {
                    continue;
                }
                if first {
                    let (u, v) = self.ends[e];
                    self.tri[e] = self.count_common_alive(u, v);
                    self.t_counted[e] = self.next_tick();
                }
                if (self.tri[e] as i64) <= tau_e {
                    let rm = self.remove_edge(e, tau_v);
                    self.q_e.extend(rm);
                }
            }
        }

        while let Some(e) = self.q_e.pop_front() {
            let (u, v) = self.ends[e];
            self.settle_removed_edge(e, u, v, tau_v, tau_e);
            self.settle_removed_edge(e, v, u, tau_v, tau_e);
        }
    }

    /// Propagate the removal of edge `e = (a, b)` to the counts of edges
    /// (a, w): the triangle (a, b, w) counts iff the (a, w) count was taken
    /// while (a, b) was alive and the third edge (b, w) has not already been
    /// drained (removed-and-popped edges come off the queue in removal order).
    fn settle_removed_edge(&mut self, e: usize, a: usize, b: usize, tau_v: i64, tau_e: i64) {
        if !self.alive_v[a] {
            return;
        }
        let removed_at = self.t_removed[e];
        for i in 0..self.g.adj(a).len() {
            let e_aw = self.eid[a][i];
            if !self.alive_e[e_aw] {
                continue;
            }
            let counted_at = self.t_counted[e_aw];
            if counted_at == 0 || counted_at > removed_at {
                continue;
            }
            let w = self.g.adj(a)[i];
            let Some(e_bw) = self.edge_id(b, w) else {
                continue;
            };
            if !self.alive_e[e_bw] && self.t_removed[e_bw] < removed_at {
                // Third edge was drained earlier; that pop already settled
                // this triangle.
                continue;
            }
            self.tri[e_aw] -= 1;
            if (self.tri[e_aw] as i64) <= tau_e {
                let rm = self.remove_edge(e_aw, tau_v);
                self.q_e.extend(rm);
            }
        }
    }

    fn count_common_alive(&self, u: usize, v: usize) -> usize {
        let (au, av) = (self.g.adj(u), self.g.adj(v));
        let (eu, ev) = (&self.eid[u], &self.eid[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < au.len() && j < av.len() {
            match au[i].cmp(&av[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if self.alive_e[eu[i]] && self.alive_e[ev[j]] {
                        count += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Two-hop closure of `v` within the alive subgraph.
    pub fn alive_two_hop(&self, v: usize) -> Vec<usize> {
        debug_assert!(self.alive_v[v]);
        let mut seen = vec![false; self.g.n()];
        seen[v] = true;
        let mut out = vec![v];
        for w in self.alive_neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
            }
            for x in self.alive_neighbors(w) {
                if !seen[x] {
                    seen[x] = true;
                    out.push(x);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Materialize the subgraph induced by `verts` (alive edges only).
    /// Returns the graph and the mapping from new id to the id in the
    /// underlying input graph.
    pub fn extract_induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut back = vec![usize::MAX; self.g.n()];
        for (new, &old) in verts.iter().enumerate() {
            back[old] = new;
        }
        let labels: Vec<u64> = verts.iter().map(|&v| self.g.label(v)).collect();
        let mut edges = Vec::new();
        for (new_u, &old_u) in verts.iter().enumerate() {
            for (i, &old_v) in self.g.adj(old_u).iter().enumerate() {
                if old_u < old_v && back[old_v] != usize::MAX && self.alive_e[self.eid[old_u][i]] {
                    edges.push((new_u, back[old_v]));
                }
            }
        }
        (Graph::with_labels(labels, edges), verts.to_vec())
    }
}

/// Fixpoint oracle: repeatedly delete any vertex with degree <= tau_v and
/// any edge with common-neighbor count <= tau_e, recomputing from scratch
/// each round. Returns alive-vertex flags and the surviving edge list.
pub fn naive_ctcp(g: &Graph, tau_v: i64, tau_e: i64) -> (Vec<bool>, Vec<(usize, usize)>) {
    let n = g.n();
    let mut alive_v = vec![true; n];
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    loop {
        let mut deg = vec![0i64; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut changed = false;
        for v in 0..n {
            if alive_v[v] && deg[v] <= tau_v && tau_v >= 0 {
                alive_v[v] = false;
                changed = true;
            }
        }
        let before = edges.len();
        let adj: Vec<std::collections::BTreeSet<usize>> = {
            let mut a = vec![std::collections::BTreeSet::new(); n];
            for &(u, v) in &edges {
                if alive_v[u] && alive_v[v] {
                    a[u].insert(v);
                    a[v].insert(u);
                }
            }
            a
        };
        edges.retain(|&(u, v)| {
            if !alive_v[u] || !alive_v[v] {
                return false;
            }
            let common = adj[u].intersection(&adj[v]).count() as i64;
            common > tau_e
        });
        changed |= edges.len() != before;
        if !changed {
            return (alive_v, edges);
        }
    }
}
