//! The solver driver: heuristic + preprocessing, divide-and-conquer over
//! minimum-degree vertices, and the recursive branch-reduce-bound search.

use std::time::{Duration, Instant};

use crate::altrb::{altrb, prefilter, seqrb, RBOutcome};
use crate::bitset::VertexSet;
use crate::bounds::compute_ub;
use crate::ctcp::Thresholds;
use crate::graph::{BitGraph, Graph};
use crate::heuristic::kpheuris;
use crate::oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    ExactAltRb,
    ExactSeqRb,
    HeuristicOnly,
    Oracle,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::ExactAltRb => "exact-altrb",
            Mode::ExactSeqRb => "exact-seqrb",
            Mode::HeuristicOnly => "heuristic",
            Mode::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub k: usize,
    pub time_limit: Duration,
    pub mode: Mode,
    /// Optional trusted lower-bound floor for the incumbent size.
    pub lb_override: Option<usize>,
    /// Cross-check every alternated pass against the one-shot bound and
    /// count violations (costly; meant for verification runs).
    pub check_bounds: bool,
}

impl SolverConfig {
    pub fn new(k: usize, mode: Mode) -> SolverConfig {
        assert!(k >= 2, "the problem is defined for k >= 2");
        SolverConfig {
            k,
            time_limit: Duration::from_secs(3600),
            mode,
            lb_override: None,
            check_bounds: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// A k-plex of size >= 2k-1 was found (and proven maximum in exact modes).
    Found,
    /// No k-plex of size >= 2k-1 exists (any min(n, k) vertices still form
    /// a trivial k-plex).
    NoneAtLeast2kMinus1,
    Timeout,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Found => "found",
            Status::NoneAtLeast2kMinus1 => "none",
            Status::Timeout => "timeout",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Stats {
    pub branches: u64,
    pub altrb_calls: u64,
    pub altrb_iterations: u64,
    pub altrb_terminations: u64,
    pub rr1_removed: u64,
    pub rr2_moved: u64,
    pub prefilter_removed: u64,
    pub bound_check_violations: u64,
    pub ctcp_vertices_removed: u64,
    pub ctcp_edges_removed: u64,
    pub lb_initial: usize,
    pub lb_final: usize,
    pub t_heuristic: Duration,
    pub t_reduce: Duration,
    pub t_search: Duration,
    pub t_total: Duration,
}

impl Stats {
    pub fn mean_altrb_iterations(&self) -> f64 {
        if self.altrb_calls == 0 {
            0.0
        } else {
            self.altrb_iterations as f64 / self.altrb_calls as f64
        }
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub status: Status,
    /// Witness in original input labels, ascending. Empty when no k-plex of
    /// size >= 2k-1 exists.
    pub best_labels: Vec<u64>,
    pub size: usize,
    pub stats: Stats,
}

/// Snapshot of one branch handed to a verification hook: the branch as it
/// entered the reduction pass and what came out of it.
pub struct BranchAudit<'a> {
    pub graph: &'a BitGraph,
    pub s_before: &'a VertexSet,
    pub c_before: &'a VertexSet,
    pub s_after: &'a VertexSet,
    pub c_star: &'a VertexSet,
    pub terminated: bool,
    pub ub_star: usize,
    pub best_at_entry: usize,
}

pub type AuditHook<'h> = dyn FnMut(&BranchAudit) + 'h;

struct Timeout;

struct SearchCtx<'a, 'h> {
    k: usize,
    mode: Mode,
    deadline: Instant,
    check_bounds: bool,
    /// Incumbent in input-graph vertex ids.
    best: Vec<usize>,
    lb_floor: usize,
    stats: &'a mut Stats,
    hook: Option<&'a mut AuditHook<'h>>,
}

impl SearchCtx<'_, '_> {
    fn lb(&self) -> usize {
        self.lb_floor.max(self.best.len())
    }
}

/// The branching rule: the candidate with the fewest neighbors in the
/// branch, ties by smallest id.
pub fn select_branching_vertex(g: &BitGraph, s: &VertexSet, c_star: &VertexSet) -> usize {
    debug_assert!(!c_star.is_empty());
    let branch = s.union(c_star);
    let mut pick = usize::MAX;
    let mut pick_deg = usize::MAX;
    for v in c_star.iter() {
        let d = g.degree_in(v, &branch);
        if d < pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    pick
}

fn brb_rec(
    ctx: &mut SearchCtx,
    g: &BitGraph,
    s: &VertexSet,
    c: &VertexSet,
    map: &[usize],
) -> Result<(), Timeout> {
    ctx.stats.branches += 1;
    if ctx.stats.branches % 64 == 0 && Instant::now() >= ctx.deadline {
        return Err(Timeout);
    }
    let best_at_entry = ctx.lb();

    let (c_filtered, removed) = prefilter(g, s, c, ctx.k, best_at_entry);
    ctx.stats.prefilter_removed += removed as u64;

    let out: RBOutcome = match ctx.mode {
        Mode::ExactAltRb => {
            let out = altrb(g, s, &c_filtered, ctx.k, best_at_entry);
            ctx.stats.altrb_calls += 1;
            ctx.stats.altrb_iterations += out.iterations as u64;
            ctx.stats.rr1_removed += out.rr1_removed as u64;
            ctx.stats.rr2_moved += out.rr2_moved as u64;
            if out.terminated {
                ctx.stats.altrb_terminations += 1;
            }
            if ctx.check_bounds {
                // The alternated pass must never be looser than the one-shot
                // bound on the same (already filtered) branch.
                let seq_ub = s.len() + compute_ub(g, s, s, &c_filtered, ctx.k);
                if out.ub_star > seq_ub || out.c_star.len() > c_filtered.len() {
                    ctx.stats.bound_check_violations += 1;
                }
            }
            out
        }
        Mode::ExactSeqRb => seqrb(g, s, &c_filtered, ctx.k, best_at_entry),
        _ => unreachable!("brb_rec runs only in exact modes"),
    };

    if let Some(hook) = ctx.hook.as_deref_mut() {
        hook(&BranchAudit {
            graph: g,
            s_before: s,
            c_before: c,
            s_after: &out.s,
            c_star: &out.c_star,
            terminated: out.terminated,
            ub_star: out.ub_star,
            best_at_entry,
        });
    }
    if out.terminated || out.ub_star <= best_at_entry {
        return Ok(());
    }

    let s_now = out.s;
    let c_star = out.c_star;
    let union = s_now.union(&c_star);
    if g.is_kplex(&union, ctx.k) {
        if union.len() > ctx.lb() {
            ctx.best = union.iter().map(|v| map[v]).collect();
        }
        return Ok(());
    }

    let v_star = select_branching_vertex(g, &s_now, &c_star);
    let mut c_rest = c_star;
    c_rest.remove(v_star);
    let mut s_inc = s_now.clone();
    s_inc.insert(v_star);
    brb_rec(ctx, g, &s_inc, &c_rest, map)?;
    brb_rec(ctx, g, &s_now, &c_rest, map)?;
    Ok(())
}

/// Solve for the maximum k-plex of size >= 2k-1.
pub fn solve(g: &Graph, cfg: &SolverConfig) -> Solution {
    solve_with_hook(g, cfg, None)
}

/// Like [`solve`], with an optional per-branch verification hook (exact
/// modes only).
pub fn solve_with_hook(g: &Graph, cfg: &SolverConfig, hook: Option<&mut AuditHook>) -> Solution {
    assert!(cfg.k >= 2, "the problem is defined for k >= 2");
    let t0 = Instant::now();
    let k = cfg.k;
    let min_size = 2 * k - 1;

    if cfg.mode == Mode::Oracle {
        let r =
            oracle::brute_max_kplex(g, k, min_size).expect("oracle mode requires a small instance");
        let mut stats = Stats::default();
        stats.lb_final = r.size;
        stats.t_total = t0.elapsed();
        let mut labels: Vec<u64> = r.witness.iter().map(|&v| g.label(v)).collect();
        labels.sort_unstable();
        return Solution {
            status: if r.size >= min_size {
                Status::Found
            } else {
                Status::NoneAtLeast2kMinus1
            },
            size: r.size,
            best_labels: labels,
            stats,
        };
    }

    let mut stats = Stats::default();
    let t_h = Instant::now();
    let h = kpheuris(g, k);
    stats.t_heuristic = t_h.elapsed();
    stats.lb_initial = h.lb.max(cfg.lb_override.unwrap_or(0));

    let mut best: Vec<usize> = h.best_set.to_vec();
    let mut state = h.state;
    stats.ctcp_vertices_removed = state.vertices_removed as u64;
    stats.ctcp_edges_removed = state.edges_removed as u64;

    if cfg.mode == Mode::HeuristicOnly {
        stats.lb_final = stats.lb_initial.max(best.len());
        stats.t_total = t0.elapsed();
        return finish(g, best, min_size, Status::Found, stats);
    }

    let deadline = t0 + cfg.time_limit;
    let mut ctx = SearchCtx {
        k,
        mode: cfg.mode,
        deadline,
        check_bounds: cfg.check_bounds,
        best,
        lb_floor: (2 * k - 2).max(cfg.lb_override.unwrap_or(0)),
        stats: &mut stats,
        hook,
    };

    let mut timed_out = false;
    loop {
        if Instant::now() >= deadline {
            timed_out = true;
            break;
        }
        let alive = state.alive_vertices();
        let Some(&v) = alive.iter().min_by_key(|&&v| (state.alive_degree(v), v)) else {
            break;
        };
        let verts = state.alive_two_hop(v);
        let (sub, map) = state.extract_induced(&verts);
        let bg = BitGraph::from_graph(&sub);
        let local_v = map.binary_search(&v).unwrap();
        let mut s0 = VertexSet::new(sub.n());
        s0.insert(local_v);
        let mut c0 = VertexSet::full(sub.n());
        c0.remove(local_v);

        let lb_before = ctx.lb();
        let t_s = Instant::now();
        let res = brb_rec(&mut ctx, &bg, &s0, &c0, &map);
        ctx.stats.t_search += t_s.elapsed();
        if res.is_err() {
            timed_out = true;
            break;
        }
        let lb_now = ctx.lb();

        let t_r = Instant::now();
        let th = Thresholds::from_lb(lb_now, k);
        state.cf_ctcp(&[v], th.tau_v, th.tau_e, lb_now > lb_before);
        ctx.stats.t_reduce += t_r.elapsed();
    }

    best = std::mem::take(&mut ctx.best);
    stats.ctcp_vertices_removed = state.vertices_removed as u64;
    stats.ctcp_edges_removed = state.edges_removed as u64;
    stats.lb_final = stats.lb_initial.max(best.len());
    stats.t_total = t0.elapsed();
    let status = if timed_out {
        Status::Timeout
    } else {
        Status::Found
    };
    finish(g, best, min_size, status, stats)
}

fn finish(g: &Graph, best: Vec<usize>, min_size: usize, status: Status, stats: Stats) -> Solution {
    let (status, best) = if best.len() >= min_size {
        (status, best)
    } else {
        (
            match status {
                Status::Timeout => Status::Timeout,
                _ => Status::NoneAtLeast2kMinus1,
            },
            Vec::new(),
        )
    };
    let mut labels: Vec<u64> = best.iter().map(|&v| g.label(v)).collect();
    labels.sort_unstable();
    Solution {
        status,
        size: best.len(),
        best_labels: labels,
        stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_any_k() {
        let g = Graph::complete(7);
        for k in 2..=3 {
            let sol = solve(&g, &SolverConfig::new(k, Mode::ExactAltRb));
            assert_eq!(sol.status, Status::Found);
            assert_eq!(sol.size, 7);
        }
    }

    #[test]
    fn c5_k2_optimum_is_3() {
        let g = Graph::cycle(5);
        let sol = solve(&g, &SolverConfig::new(2, Mode::ExactAltRb));
        assert_eq!(sol.status, Status::Found);
        assert_eq!(sol.size, 3);
    }

    #[test]
    fn none_status_when_below_floor() {
        // k=3 needs size >= 5; C4 has no 3-plex of size 5.
        let g = Graph::cycle(4);
        let sol = solve(&g, &SolverConfig::new(3, Mode::ExactAltRb));
        assert_eq!(sol.status, Status::NoneAtLeast2kMinus1);
        assert_eq!(sol.size, 0);
    }

    #[test]
    fn branching_vertex_prefers_low_degree() {
        // star: center 0 with leaves; a leaf has fewer branch neighbors
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let bg = BitGraph::from_graph(&g);
        let s = VertexSet::new(4);
        let c = VertexSet::full(4);
        assert_eq!(select_branching_vertex(&bg, &s, &c), 1);
        let single = VertexSet::from_iter(4, [2]);
        assert_eq!(select_branching_vertex(&bg, &s, &single), 2);
    }

    #[test]
    fn seqrb_mode_agrees_on_small_graphs() {
        let g = Graph::cycle(7);
        let a = solve(&g, &SolverConfig::new(2, Mode::ExactAltRb));
        let b = solve(&g, &SolverConfig::new(2, Mode::ExactSeqRb));
        assert_eq!(a.size, b.size);
    }
}
