//! Detection and verification of induced stars K_{1,t}.
//!
//! A star witness is a center plus t leaves: every leaf adjacent to the
//! center and the leaves pairwise nonadjacent. That is exactly what "induced
//! K_{1,t}" requires — the induced subgraph on the t+1 vertices then has the
//! center's t edges and nothing else. Detection scans candidate centers in
//! index order and runs an exact branch-and-bound independent-set search
//! inside each neighborhood, so the result is deterministic: the first
//! feasible center in index order wins.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An induced K_{1,t}: `center` adjacent to every vertex of `leaves`, and
/// `leaves` pairwise nonadjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct StarWitness {
    pub center: usize,
    pub leaves: VertexSet,
}

/// Search `cands` (a bit set) for an independent set of exactly `t`
/// vertices. Branch and bound: the pivot is the vertex of maximum degree
/// within the candidate subgraph (ties to the lowest index) — the vertex
/// least likely to sit in a large independent set — and the exclude branch
/// is taken first. Prunes when fewer than `t` candidates remain.
fn independent_subset(g: &Graph, cands: u64, t: usize) -> Option<u64> {
    if t == 0 {
        return Some(0);
    }
    if (cands.count_ones() as usize) < t {
        return None;
    }
    let mut pivot = usize::MAX;
    let mut pivot_deg = 0;
    let mut bits = cands;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let deg = (g.neighbors(v).0 & cands).count_ones() as usize;
        if pivot == usize::MAX || deg > pivot_deg {
            pivot = v;
            pivot_deg = deg;
        }
    }
    if pivot_deg == 0 {
        // The candidates are already independent; take the t lowest.
        let mut set = 0u64;
        let mut bits = cands;
        for _ in 0..t {
            set |= bits & bits.wrapping_neg();
            bits &= bits - 1;
        }
        return Some(set);
    }
    independent_subset(g, cands & !(1 << pivot), t)
        .or_else(|| {
            independent_subset(g, cands & !(1 << pivot) & !g.neighbors(pivot).0, t - 1)
                .map(|set| set | 1 << pivot)
        })
}

/// Find an induced K_{1,t} in G, or `None` if there is none. Requires
/// t ≥ 1. Centers are tried in index order; the first feasible one wins, so
/// identical inputs yield identical witnesses.
pub fn find_induced_star(g: &Graph, t: usize) -> Option<StarWitness> {
    assert!(t >= 1, "a star needs at least one leaf");
    for center in 0..g.n() {
        if g.degree(center) < t {
            continue;
        }
        if let Some(set) = independent_subset(g, g.neighbors(center).0, t) {
            return Some(StarWitness {
                center,
                leaves: VertexSet(set),
            });
        }
    }
    None
}

/// Check a claimed witness against the graph: exactly t leaves, all adjacent
/// to the center, pairwise nonadjacent, center not among them. Out-of-range
/// vertices are an argument error rather than `false` — the witness does not
/// even refer to G.
pub fn verify_star_witness(g: &Graph, w: &StarWitness, t: usize) -> Result<bool> {
    if w.center >= g.n() {
        return Err(Error::arg(format!("center {} out of range", w.center)));
    }
    if w.leaves.iter().any(|v| v >= g.n()) {
        return Err(Error::arg("leaf out of range"));
    }
    Ok(w.leaves.len() == t
        && !w.leaves.contains(w.center)
        && w.leaves.0 & !g.neighbors(w.center).0 == 0
        && g.is_independent_set(w.leaves))
}
