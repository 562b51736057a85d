//! Alternated reduction-and-bound on a partitioned branch, plus the
//! one-shot sequential baseline.

use crate::bitset::VertexSet;
use crate::bounds::{compute_ub, greedy_partition, PartitionedBranch};
use crate::graph::BitGraph;

/// Which side of the partition a rule is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Outcome of one reduction-and-bound pass over a branch.
#[derive(Clone, Debug)]
pub struct RBOutcome {
    /// Refined candidate set.
    pub c_star: VertexSet,
    /// Upper bound on the largest k-plex in the branch.
    pub ub_star: usize,
    /// Possibly-grown partial solution (forced inclusions).
    pub s: VertexSet,
    /// The branch admits no k-plex larger than the incumbent.
    pub terminated: bool,
    /// Number of loop-head evaluations.
    pub iterations: usize,
    pub rr1_removed: usize,
    pub rr2_moved: usize,
}

/// Degree-threshold removals on one side, iterated to a fixpoint.
/// Uses the branch's current LB values (clamped below at zero).
pub fn rr1(
    g: &BitGraph,
    pb: &mut PartitionedBranch,
    s: &VertexSet,
    k: usize,
    side: Side,
) -> Vec<usize> {
    let mut removed = Vec::new();
    let lb_l = pb.lb_l.max(0);
    let lb_r = pb.lb_r.max(0);
    loop {
        let s_cl = s.union(&pb.c_l);
        let s_cr = s.union(&pb.c_r);
        let s_len = s.len() as i64;
        let (side_set, thr_same, thr_other) = match side {
            // v in C_L: drop when |N(v, S∪C_L)| < LB_L + |S| - k
            //        or |N(v, S∪C_R)| < LB_R + |S| - k + 1
            Side::Left => (
                &pb.c_l,
                lb_l + s_len - k as i64,
                lb_r + s_len - k as i64 + 1,
            ),
            Side::Right => (
                &pb.c_r,
                lb_r + s_len - k as i64,
                lb_l + s_len - k as i64 + 1,
            ),
        };
        let mut victim = None;
        for v in side_set.iter() {
            let (deg_same, deg_other) = match side {
                Side::Left => (g.degree_in(v, &s_cl), g.degree_in(v, &s_cr)),
                Side::Right => (g.degree_in(v, &s_cr), g.degree_in(v, &s_cl)),
            };
            if (deg_same as i64) < thr_same || (deg_other as i64) < thr_other {
                victim = Some(v);
                break;
            }
        }
        match victim {
            Some(v) => {
                match side {
                    Side::Left => pb.c_l.remove(v),
                    Side::Right => pb.c_r.remove(v),
                };
                removed.push(v);
            }
            None => break,
        }
    }
    removed
}

/// What the forced-inclusion rule decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rr2Action {
    NoOp,
    /// All candidates of the side were moved into S.
    Moved(usize),
    /// The branch cannot hold a k-plex larger than the incumbent.
    Terminated,
}

/// Forced inclusion: when the branch bound is exactly `best + 1` and one
/// side's bound is tight at its candidate count, that whole side is either
/// in the improving k-plex or the branch is dead.
pub fn rr2(
    g: &BitGraph,
    pb: &mut PartitionedBranch,
    s: &mut VertexSet,
    k: usize,
    best_size: usize,
    side: Side,
) -> Rr2Action {
    if pb.ub_l + pb.ub_r + s.len() != best_size + 1 {
        return Rr2Action::NoOp;
    }
    let (cand, tight) = match side {
        Side::Left => (&pb.c_l, pb.ub_l == pb.c_l.len()),
        Side::Right => (&pb.c_r, pb.ub_r == pb.c_r.len()),
    };
    if !tight || cand.is_empty() {
        return Rr2Action::NoOp;
    }
    let grown = s.union(cand);
    if !g.is_kplex(&grown, k) {
        return Rr2Action::Terminated;
    }
    let moved = cand.len();
    *s = grown;
    match side {
        Side::Left => {
            pb.s_l.union_with(&pb.c_l);
            pb.c_l.clear();
            pb.ub_l = 0;
        }
        Side::Right => {
            pb.s_r.union_with(&pb.c_r);
            pb.c_r.clear();
            pb.ub_r = 0;
        }
    }
    Rr2Action::Moved(moved)
}

/// Drop candidates `v` whose inclusion alone breaks the k-plex property of
/// the (possibly grown) partial solution. Needed after a forced inclusion so
/// branching vertices stay individually addable.
fn drop_incompatible(g: &BitGraph, pb: &mut PartitionedBranch, s: &VertexSet, k: usize) -> usize {
    let mut saturated = VertexSet::new(s.capacity());
    for u in s.iter() {
        if g.non_neighbors_in(u, s) == k {
            saturated.insert(u);
        }
    }
    let mut dropped = 0;
    for side in [Side::Left, Side::Right] {
        let set = match side {
            Side::Left => &mut pb.c_l,
            Side::Right => &mut pb.c_r,
        };
        for v in set.clone().iter() {
            let over_budget = s.len() + 1 - g.degree_in(v, s) > k;
            let blocks_saturated = saturated.intersection_size(g.row(v)) < saturated.len();
            if over_budget || blocks_saturated {
                set.remove(v);
                dropped += 1;
            }
        }
    }
    dropped
}

/// The alternated reduction-and-bound pass (partition, then bound one side,
/// reduce the other, and repeat until the left bound stabilizes).
pub fn altrb(
    g: &BitGraph,
    s0: &VertexSet,
    c0: &VertexSet,
    k: usize,
    best_size: usize,
) -> RBOutcome {
    let mut s = s0.clone();
    let mut pb = greedy_partition(g, &s, c0, k);
    pb.ub_l = pb.c_l.len();
    pb.lb_l = 0;
    // The loop head reads UB_R, so seed it before the first iteration.
    pb.ub_r = compute_ub(g, &s, &pb.s_r, &pb.c_r, k);
    let mut iterations = 0;
    let mut rr1_removed = 0;
    let mut rr2_moved = 0;
    let mut terminated = false;

    loop {
        iterations += 1;
        let cu = compute_ub(g, &s, &pb.s_l, &pb.c_l, k);
        if cu >= pb.ub_l {
            // Converged (a larger value would be a looser rebound of the
            // same side; the previous bound stays valid).
            break;
        }
        pb.ub_l = cu;

        // Step 2: reduce the right side with the refreshed left bound. Both
        // LB values are recomputed here: the removal rule for one side reads
        // the other side's LB too, and |S| may have grown since it was set.
        pb.lb_r = (best_size as i64 + 1) - s.len() as i64 - pb.ub_l as i64;
        pb.lb_l = (best_size as i64 + 1) - s.len() as i64 - pb.ub_r as i64;
        rr1_removed += rr1(g, &mut pb, &s, k, Side::Right).len();
        match rr2(g, &mut pb, &mut s, k, best_size, Side::Right) {
            Rr2Action::Terminated => {
                terminated = true;
                break;
            }
            Rr2Action::Moved(n) => {
                rr2_moved += n;
                drop_incompatible(g, &mut pb, &s, k);
            }
            Rr2Action::NoOp => {}
        }

        // Step 3: rebound the right side (never looser than before).
        let cu_r = compute_ub(g, &s, &pb.s_r, &pb.c_r, k);
        pb.ub_r = pb.ub_r.min(cu_r);

        // Step 4: reduce the left side, again with fresh LB values.
        pb.lb_l = (best_size as i64 + 1) - s.len() as i64 - pb.ub_r as i64;
        pb.lb_r = (best_size as i64 + 1) - s.len() as i64 - pb.ub_l as i64;
        rr1_removed += rr1(g, &mut pb, &s, k, Side::Left).len();
        match rr2(g, &mut pb, &mut s, k, best_size, Side::Left) {
            Rr2Action::Terminated => {
                terminated = true;
                break;
            }
            Rr2Action::Moved(n) => {
                rr2_moved += n;
                drop_incompatible(g, &mut pb, &s, k);
            }
            Rr2Action::NoOp => {}
        }
    }

    RBOutcome {
        c_star: pb.c_l.union(&pb.c_r),
        ub_star: s.len() + pb.ub_l + pb.ub_r,
        s,
        terminated,
        iterations,
        rr1_removed,
        rr2_moved,
    }
}

/// Incumbent-based candidate filter: drop `v` when `S ∪ {v}` is not a
/// k-plex or its degree in the whole branch cannot reach `best + 1`.
/// This runs before either reduction-and-bound pass.
pub fn prefilter(
    g: &BitGraph,
    s: &VertexSet,
    c: &VertexSet,
    k: usize,
    best_size: usize,
) -> (VertexSet, usize) {
    let mut out = c.clone();
    let mut saturated = VertexSet::new(s.capacity());
    for u in s.iter() {
        if g.non_neighbors_in(u, s) == k {
            saturated.insert(u);
        }
    }
    let mut removed = 0;
    for v in c.iter() {
        let over_budget = s.len() + 1 - g.degree_in(v, s) > k;
        let blocks_saturated = saturated.intersection_size(g.row(v)) < saturated.len();
        let branch = s.union(&out);
        let low_degree = g.degree_in(v, &branch) + k < best_size + 1;
        if over_budget || blocks_saturated || low_degree {
            out.remove(v);
            removed += 1;
        }
    }
    (out, removed)
}

/// The sequential baseline: one incumbent-based reduction pass, then one
/// whole-branch bound. No alternation.
pub fn seqrb(
    g: &BitGraph,
    s0: &VertexSet,
    c0: &VertexSet,
    k: usize,
    best_size: usize,
) -> RBOutcome {
    let (c_star, _removed) = prefilter(g, s0, c0, k, best_size);
    let ub_star = s0.len() + compute_ub(g, s0, s0, &c_star, k);
    RBOutcome {
        c_star,
        ub_star,
        s: s0.clone(),
        terminated: false,
        iterations: 1,
        rr1_removed: 0,
        rr2_moved: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn rr1_vacuous_thresholds_remove_nothing() {
        let g = Graph::cycle(6);
        let bg = BitGraph::from_graph(&g);
        let s = VertexSet::from_iter(6, [0]);
        let mut pb = greedy_partition(&bg, &s, &VertexSet::from_iter(6, [1, 2, 3]), 2);
        pb.lb_l = -5;
        pb.lb_r = -5;
        assert!(rr1(&bg, &mut pb, &s, 2, Side::Left).is_empty());
        assert!(rr1(&bg, &mut pb, &s, 2, Side::Right).is_empty());
    }

    #[test]
    fn rr1_removes_isolated_candidate() {
        // v=3 has no neighbors in S∪C_R; with LB_R + |S| - k + 1 = 1 it goes.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]);
        let bg = BitGraph::from_graph(&g);
        let s = VertexSet::from_iter(4, [0]);
        let mut pb = PartitionedBranch {
            s_l: VertexSet::new(4),
            s_r: s.clone(),
            c_l: VertexSet::from_iter(4, [3]),
            c_r: VertexSet::from_iter(4, [1, 2]),
            ub_l: 1,
            ub_r: 2,
            lb_l: 0,
            lb_r: 2, // LB_R + |S| - k + 1 = 2 + 1 - 2 + 1 = 2 > 0 = |N(3, S∪C_R)|
        };
        let removed = rr1(&bg, &mut pb, &s, 2, Side::Left);
        assert_eq!(removed, vec![3]);
    }

    #[test]
    fn rr2_moves_clique_side() {
        // S ∪ C_L is a triangle; conditions tuned so the rule fires.
        let g = Graph::complete(3);
        let bg = BitGraph::from_graph(&g);
        let mut s = VertexSet::from_iter(3, [0]);
        let mut pb = PartitionedBranch {
            s_l: VertexSet::new(3),
            s_r: VertexSet::from_iter(3, [0]),
            c_l: VertexSet::from_iter(3, [1, 2]),
            c_r: VertexSet::new(3),
            ub_l: 2,
            ub_r: 0,
            lb_l: 0,
            lb_r: 0,
        };
        // best = 2: UB_L + UB_R + |S| = 3 = best + 1 and UB_L = |C_L|.
        let action = rr2(&bg, &mut pb, &mut s, 2, 2, Side::Left);
        assert_eq!(action, Rr2Action::Moved(2));
        assert_eq!(s.len(), 3);
        assert!(pb.c_l.is_empty());
    }

    #[test]
    fn rr2_above_target_is_noop() {
        let g = Graph::complete(3);
        let bg = BitGraph::from_graph(&g);
        let mut s = VertexSet::from_iter(3, [0]);
        let mut pb = PartitionedBranch {
            s_l: VertexSet::new(3),
            s_r: s.clone(),
            c_l: VertexSet::from_iter(3, [1, 2]),
            c_r: VertexSet::new(3),
            ub_l: 2,
            ub_r: 0,
            lb_l: 0,
            lb_r: 0,
        };
        assert_eq!(rr2(&bg, &mut pb, &mut s, 2, 1, Side::Left), Rr2Action::NoOp);
    }

    #[test]
    fn rr2_terminates_on_non_kplex_side() {
        // S = {0}, C_L = {1, 2} with 1-2 and 0-1, 0-2 missing enough edges
        // that S ∪ C_L is not a 2-plex: use an empty graph on 3 vertices.
        let g = Graph::from_edges(3, std::iter::empty());
        let bg = BitGraph::from_graph(&g);
        let mut s = VertexSet::from_iter(3, [0]);
        let mut pb = PartitionedBranch {
            s_l: VertexSet::new(3),
            s_r: s.clone(),
            c_l: VertexSet::from_iter(3, [1, 2]),
            c_r: VertexSet::new(3),
            ub_l: 2,
            ub_r: 0,
            lb_l: 0,
            lb_r: 0,
        };
        assert_eq!(
            rr2(&bg, &mut pb, &mut s, 2, 2, Side::Left),
            Rr2Action::Terminated
        );
    }

    #[test]
    fn altrb_empty_candidates() {
        let g = Graph::complete(4);
        let bg = BitGraph::from_graph(&g);
        let s = VertexSet::from_iter(4, [0, 1]);
        let c = VertexSet::new(4);
        let out = altrb(&bg, &s, &c, 2, 3);
        assert!(!out.terminated);
        assert_eq!(out.ub_star, 2);
        assert!(out.c_star.is_empty());
        assert_eq!(out.iterations, 1);
    }

    #[test]
    fn seqrb_empty_candidates() {
        let g = Graph::complete(4);
        let bg = BitGraph::from_graph(&g);
        let s = VertexSet::from_iter(4, [0, 1]);
        let out = seqrb(&bg, &s, &VertexSet::new(4), 2, 3);
        assert_eq!(out.ub_star, 2);
    }

    #[test]
    fn seqrb_complete_graph_bound_is_n() {
        let g = Graph::complete(6);
        let bg = BitGraph::from_graph(&g);
        let s = VertexSet::new(6);
        let out = seqrb(&bg, &s, &VertexSet::full(6), 1, 0);
        assert_eq!(out.ub_star, 6);
    }
}
