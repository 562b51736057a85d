//! Partition-based upper bound and the greedy branch partition it pairs with.

use crate::bitset::VertexSet;
use crate::graph::BitGraph;

/// The two-sided split of a branch, with the per-side bound scalars the
/// alternated reduction loop maintains.
#[derive(Clone, Debug)]
pub struct PartitionedBranch {
    pub s_l: VertexSet,
    pub s_r: VertexSet,
    pub c_l: VertexSet,
    pub c_r: VertexSet,
    pub ub_l: usize,
    pub ub_r: usize,
    pub lb_l: i64,
    pub lb_r: i64,
}

/// Pivot sequence and bucket decomposition behind one bound evaluation.
#[derive(Clone, Debug)]
pub struct UBPartition {
    pub pivots: Vec<usize>,
    pub buckets: Vec<VertexSet>,
    /// Per-pivot candidate allowance `k - |N̄(u_i, S)|`.
    pub caps: Vec<usize>,
    /// Candidates adjacent to every pivot.
    pub rest: VertexSet,
}

impl UBPartition {
    pub fn bound(&self) -> usize {
        self.rest.len()
            + self
                .buckets
                .iter()
                .zip(&self.caps)
                .map(|(b, &cap)| b.len().min(cap))
                .sum::<usize>()
    }
}

/// Ratios `num/den` compared exactly; a zero denominator with a positive
/// numerator compares above everything.
fn ratio_gt(a: (usize, usize), b: (usize, usize)) -> bool {
    let norm = |(num, den): (usize, usize)| -> Option<(u64, u64)> {
        if den == 0 {
            if num > 0 {
                None // +infinity
            } else {
                Some((0, 1))
            }
        } else {
            Some((num as u64, den as u64))
        }
    };
    match (norm(a), norm(b)) {
        (None, None) => false,
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (Some((an, ad)), Some((bn, bd))) => an * bd > bn * ad,
    }
}

/// `num/den > 1` under the same conventions.
fn ratio_gt_one(num: usize, den: usize) -> bool {
    if den == 0 {
        num > 0
    } else {
        num > den
    }
}

/// Build the bucket decomposition of `c_part` over pivots drawn from
/// `s_part`, selecting at each step the pivot with the largest ratio
/// `|N̄(u, C^i)| / (k - |N̄(u, S)|)`, ties by smallest id.
pub fn ub_partition(
    g: &BitGraph,
    s_full: &VertexSet,
    s_part: &VertexSet,
    c_part: &VertexSet,
    k: usize,
) -> UBPartition {
    let mut remaining_s = s_part.clone();
    let mut remaining_c = c_part.clone();
    let mut pivots = Vec::new();
    let mut buckets = Vec::new();
    let mut caps = Vec::new();
    while !remaining_s.is_empty() {
        let mut pick = usize::MAX;
        let mut pick_ratio = (0usize, 0usize);
        for v in remaining_s.iter() {
            let num = g.non_neighbors_in(v, &remaining_c);
            let den = (k as i64 - g.non_neighbors_in(v, s_full) as i64).max(0) as usize;
            if pick == usize::MAX || ratio_gt((num, den), pick_ratio) {
                pick = v;
                pick_ratio = (num, den);
            }
        }
        let mut bucket = remaining_c.clone();
        bucket.subtract(g.row(pick));
        remaining_c.subtract(&bucket);
        remaining_s.remove(pick);
        caps.push(pick_ratio.1);
        pivots.push(pick);
        buckets.push(bucket);
    }
    UBPartition {
        pivots,
        buckets,
        caps,
        rest: remaining_c,
    }
}

/// Upper bound on `|C_part ∩ H|` over every k-plex `H` in the branch.
pub fn compute_ub(
    g: &BitGraph,
    s_full: &VertexSet,
    s_part: &VertexSet,
    c_part: &VertexSet,
    k: usize,
) -> usize {
    ub_partition(g, s_full, s_part, c_part, k).bound()
}

/// Greedily peel off the side of the branch with more missing edges: move
/// the vertex maximizing `|N̄(v, C)| / (k - |N̄(v, S)|)` (with its candidate
/// non-neighbors) to the left until that ratio drops to 1.
///
/// Denominators are taken against the full `S` at call time, which is what
/// makes the bound on the right side collapse to `|C_R|`.
pub fn greedy_partition(g: &BitGraph, s: &VertexSet, c: &VertexSet, k: usize) -> PartitionedBranch {
    let cap = s.capacity();
    let mut s_work = s.clone();
    let mut c_work = c.clone();
    let mut s_l = VertexSet::new(cap);
    let mut c_l = VertexSet::new(cap);
    while !s_work.is_empty() {
        let mut pick = usize::MAX;
        let mut pick_ratio = (0usize, 0usize);
        for v in s_work.iter() {
            let num = g.non_neighbors_in(v, &c_work);
            let den = (k as i64 - g.non_neighbors_in(v, s) as i64).max(0) as usize;
            if pick == usize::MAX || ratio_gt((num, den), pick_ratio) {
                pick = v;
                pick_ratio = (num, den);
            }
        }
        if !ratio_gt_one(pick_ratio.0, pick_ratio.1) {
            break;
        }
        let mut moved = c_work.clone();
        moved.subtract(g.row(pick));
        s_l.insert(pick);
        c_l.union_with(&moved);
        c_work.subtract(&moved);
        s_work.remove(pick);
    }
    let ub_l = c_l.len();
    let ub_r = c_work.len();
    PartitionedBranch {
        s_l,
        s_r: s_work,
        c_l,
        c_r: c_work,
        ub_l,
        ub_r,
        lb_l: 0,
        lb_r: 0,
    }
}
