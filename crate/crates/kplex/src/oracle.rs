//! Brute-force ground truth for small instances.
//!
//! The recursion prunes only via superset-monotonicity of infeasibility
//! (extending an infeasible set never helps), so it shares no bounding
//! machinery with the solver it checks.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Largest instance the exhaustive search accepts.
pub const ORACLE_VERTEX_LIMIT: usize = 25;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("instance too large for the brute-force oracle: {0} vertices (limit {1})")]
    TooLarge(usize, usize),
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    /// Size of the maximum k-plex meeting the size floor; 0 if none exists.
    pub size: usize,
    /// One witness set (internal vertex ids), empty if none exists.
    pub witness: Vec<usize>,
}

/// Can `v` be appended to the k-plex `members` (checked from the definition)?
fn can_extend(g: &Graph, members: &[usize], v: usize, k: usize) -> bool {
    let mut v_nonadj = 1; // v itself
    for &u in members {
        if !g.has_edge(u, v) {
            v_nonadj += 1;
        }
    }
    if v_nonadj > k {
        return false;
    }
    for &u in members {
        let mut u_nonadj = 1;
        for &w in members {
            if w != u && !g.has_edge(u, w) {
                u_nonadj += 1;
            }
        }
        if !g.has_edge(u, v) {
            u_nonadj += 1;
        }
        if u_nonadj > k {
            return false;
        }
    }
    true
}

/// Exact maximum k-plex of size at least `min_size`.
pub fn brute_max_kplex(g: &Graph, k: usize, min_size: usize) -> Result<OracleResult, OracleError> {
    if g.n() > ORACLE_VERTEX_LIMIT {
        return Err(OracleError::TooLarge(g.n(), ORACLE_VERTEX_LIMIT));
    }
    let mut best: Vec<usize> = Vec::new();
    let mut members: Vec<usize> = Vec::new();
    dfs_max(g, k, min_size, 0, &mut members, &mut best);
    Ok(OracleResult {
        size: best.len(),
        witness: best,
    })
}

fn dfs_max(
    g: &Graph,
    k: usize,
    min_size: usize,
    next: usize,
    members: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if members.len() >= min_size && members.len() > best.len() {
        *best = members.clone();
    }
    if next == g.n() {
        return;
    }
    if can_extend(g, members, next, k) {
        members.push(next);
        dfs_max(g, k, min_size, next + 1, members, best);
        members.pop();
    }
    dfs_max(g, k, min_size, next + 1, members, best);
}

/// All k-plexes `H` with `S ⊆ H ⊆ S ∪ C` and `|H| ≥ min_size`, each as a
/// sorted vertex list.
pub fn enumerate_branch_kplexes(
    g: &Graph,
    s: &VertexSet,
    c: &VertexSet,
    k: usize,
    min_size: usize,
) -> Result<Vec<Vec<usize>>, OracleError> {
    let total = s.union(c).len();
    if total > ORACLE_VERTEX_LIMIT {
        return Err(OracleError::TooLarge(total, ORACLE_VERTEX_LIMIT));
    }
    let mut out = Vec::new();
    if !g.is_kplex(s, k) {
        // No superset of a non-k-plex is a k-plex.
        return Ok(out);
    }
    let mut members: Vec<usize> = s.to_vec();
    let cand: Vec<usize> = c.difference(s).to_vec();
    dfs_enum(g, k, min_size, &cand, 0, &mut members, &mut out);
    Ok(out)
}

fn dfs_enum(
    g: &Graph,
    k: usize,
    min_size: usize,
    cand: &[usize],
    idx: usize,
    members: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if idx == cand.len() {
        if members.len() >= min_size {
            let mut h = members.clone();
            h.sort_unstable();
            out.push(h);
        }
        return;
    }
    if can_extend(g, members, cand[idx], k) {
        members.push(cand[idx]);
        dfs_enum(g, k, min_size, cand, idx + 1, members, out);
        members.pop();
    }
    dfs_enum(g, k, min_size, cand, idx + 1, members, out);
}
