//! Greedy initial k-plex: degeneracy-order insertion on the whole graph and
//! on per-vertex two-hop subgraphs, interleaved with co-pruning.

use crate::bitset::VertexSet;
use crate::ctcp::{ReductionState, Thresholds};
use crate::graph::Graph;

/// Result of the heuristic phase. `best_set` induces a maximal k-plex in the
/// graph it was found in; `lb` is the reduction lower bound (floored at 2k-2).
pub struct HeuristicOutcome<'g> {
    pub best_set: VertexSet,
    pub lb: usize,
    pub state: ReductionState<'g>,
}

/// Scan the degeneracy order back-to-front, greedily inserting every vertex
/// that keeps the set a k-plex. The result is a maximal k-plex.
pub fn degen_greedy(g: &Graph, k: usize) -> VertexSet {
    let n = g.n();
    let order = g.degeneracy_order().order;
    let mut s = VertexSet::new(n);
    let mut members: Vec<usize> = Vec::new();
    // adj_in[v] = |N(v, S)|, maintained for every vertex.
    let mut adj_in = vec![0usize; n];
    for &v in order.iter().rev() {
        // v is insertable iff it keeps <= k-1 non-neighbors in S and every
        // saturated member of S is adjacent to it.
        if members.len() - adj_in[v] > k - 1 {
            continue;
        }
        let mut ok = true;
        for &u in &members {
            let nn_u = members.len() - adj_in[u]; // counts u itself
            if nn_u == k && !g.has_edge(u, v) {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        s.insert(v);
        members.push(v);
        for &w in g.adj(v) {
            adj_in[w] += 1;
        }
    }
    s
}

/// Heuristic phase: an initial greedy k-plex, then one greedy probe per
/// surviving vertex on its forward two-hop subgraph, shrinking the graph
/// whenever the lower bound improves.
pub fn kpheuris(g: &Graph, k: usize) -> HeuristicOutcome<'_> {
    assert!(k >= 2, "the solver is defined for k >= 2");
    let n = g.n();
    let dres = g.degeneracy_order();
    let pos = dres.positions();

    let mut best = degen_greedy(g, k);
    let mut lb = (2 * k - 2).max(best.len());
    let mut state = ReductionState::new(g);
    let th = Thresholds::from_lb(lb, k);
    state.cf_ctcp(&[], th.tau_v, th.tau_e, true);

    for i in 0..n {
        let v = dres.order[i];
        if !state.is_alive(v) {
            continue;
        }
        // Forward part of the order intersected with the two-hop closure,
        // both taken in the current reduced graph.
        let verts: Vec<usize> = state
            .alive_two_hop(v)
            .into_iter()
            .filter(|&w| pos[w] >= i)
            .collect();
        if verts.len() <= best.len() {
            continue;
        }
        let (sub, map) = state.extract_induced(&verts);
        let found = degen_greedy(&sub, k);
        if found.len() > best.len() {
            let mut lifted = VertexSet::new(n);
            for local in found.iter() {
                lifted.insert(map[local]);
            }
            best = lifted;
            if best.len() > lb {
                lb = best.len();
                let th = Thresholds::from_lb(lb, k);
                state.cf_ctcp(&[], th.tau_v, th.tau_e, true);
            }
        }
    }

    HeuristicOutcome {
        best_set: best,
        lb,
        state,
    }
}
