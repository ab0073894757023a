//! Exact longest-path and longest-cycle search.
//!
//! Lengths come from dynamic programming over (vertex subset, endpoint)
//! states for n ≤ 20 — per-subset endpoint sets are single bit rows — and
//! from depth-first branch and bound above that, up to the hard cap of 24
//! vertices. Witnesses are reconstructed separately: a second search walks
//! extensions in ascending vertex order and returns the first sequence that
//! reaches the known optimal length, so among all optima the
//! lexicographically least vertex sequence is returned, and reruns are
//! byte-for-byte reproducible. Cycle witnesses start at their smallest
//! vertex.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap for the exact searches.
pub const SEARCH_CAP: usize = 24;
/// Largest n whose subset table fits comfortably in memory; beyond this the
/// length search switches to branch and bound.
const DP_CAP: usize = 20;

// ============================================================================
// Vertex sequences
// ============================================================================

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceKind {
    Path,
    Cycle,
}

/// A validated path or cycle in a host graph: distinct vertices, consecutive
/// ones adjacent, and for cycles the wrap-around edge too (length ≥ 3).
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct VertexSequence {
    kind: SequenceKind,
    vertices: Vec<usize>,
}

impl VertexSequence {
    pub fn path(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        Self::validated(g, SequenceKind::Path, vertices)
    }

    pub fn cycle(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        Self::validated(g, SequenceKind::Cycle, vertices)
    }

    fn validated(g: &Graph, kind: SequenceKind, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::arg("sequence must be nonempty"));
        }
        if kind == SequenceKind::Cycle && vertices.len() < 3 {
            return Err(Error::arg("a cycle needs at least 3 vertices"));
        }
        let mut seen = 0u64;
        for &v in &vertices {
            if v >= g.n() {
                return Err(Error::arg(format!("vertex {v} out of range")));
            }
            if seen >> v & 1 == 1 {
                return Err(Error::arg(format!("vertex {v} repeats")));
            }
            seen |= 1 << v;
        }
        for pair in vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(Error::arg(format!(
                    "consecutive vertices {} and {} are not adjacent",
                    pair[0], pair[1]
                )));
            }
        }
        if kind == SequenceKind::Cycle {
            let (first, last) = (vertices[0], vertices[vertices.len() - 1]);
            if !g.has_edge(last, first) {
                return Err(Error::arg(format!(
                    "cycle does not close: {last} and {first} are not adjacent"
                )));
            }
        }
        Ok(VertexSequence { kind, vertices })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The vertices as a bit mask.
    pub fn vertex_mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }
}

// ============================================================================
// Length search
// ============================================================================

fn check_size(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::arg("graph has no vertices"));
    }
    if g.n() > SEARCH_CAP {
        return Err(Error::Capacity {
            what: "vertex count for exact search",
            requested: g.n(),
            limit: SEARCH_CAP,
        });
    }
    Ok(())
}

/// Number of vertices outside `visited` reachable from `from` through
/// unvisited vertices; an upper bound on how much a path ending at `from`
/// can still grow.
#[inline]
fn growth_bound(g: &Graph, from: usize, visited: u64) -> usize {
    let mut reached = g.neighbors(from).0 & !visited;
    loop {
        let mut frontier = 0u64;
        let mut bits = reached;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            frontier |= g.neighbors(v).0;
        }
        let next = reached | (frontier & !visited);
        if next == reached {
            return reached.count_ones() as usize;
        }
        reached = next;
    }
}

/// p(G) by subset dynamic programming.
fn path_len_dp(g: &Graph) -> usize {
    let n = g.n();
    let mut reach = vec![0u64; 1 << n];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    let mut best = 1;
    for mask in 1usize..1 << n {
        let row = reach[mask];
        if row == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        let mut bits = row;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut ext = g.neighbors(e).0 & !(mask as u64);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

/// p(G) by branch and bound, for graphs past the table size.
fn path_len_bb(g: &Graph) -> usize {
    fn dfs(g: &Graph, endpoint: usize, visited: u64, len: usize, best: &mut usize) {
        if len > *best {
            *best = len;
        }
        if *best == g.n() || len + growth_bound(g, endpoint, visited) <= *best {
            return;
        }
        let mut ext = g.neighbors(endpoint).0 & !visited;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            dfs(g, w, visited | 1 << w, len + 1, best);
        }
    }
    let mut best = 1;
    for s in 0..g.n() {
        dfs(g, s, 1 << s, 1, &mut best);
        if best == g.n() {
            break;
        }
    }
    best
}

/// Length of a longest path, in vertices, without witness reconstruction.
pub fn longest_path_len(g: &Graph) -> Result<usize> {
    check_size(g)?;
    Ok(if g.n() <= DP_CAP {
        path_len_dp(g)
    } else {
        path_len_bb(g)
    })
}

/// c(G) by subset dynamic programming. States are paths that start at the
/// smallest vertex of their subset and stay above it; a state whose endpoint
/// sees that smallest vertex closes into a cycle.
fn cycle_len_dp(g: &Graph) -> usize {
    let n = g.n();
    let mut reach = vec![0u64; 1 << n];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    let mut best = 0;
    for mask in 1usize..1 << n {
        let row = reach[mask];
        if row == 0 {
            continue;
        }
        let s = mask.trailing_zeros() as usize;
        let cnt = mask.count_ones() as usize;
        if cnt >= 3 && row & g.neighbors(s).0 != 0 {
            best = best.max(cnt);
        }
        let above_s = !0u64 << (s + 1);
        let mut bits = row;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut ext = g.neighbors(e).0 & !(mask as u64) & above_s;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

/// c(G) by branch and bound.
fn cycle_len_bb(g: &Graph) -> usize {
    fn dfs(g: &Graph, start: usize, endpoint: usize, visited: u64, len: usize, best: &mut usize) {
        if len >= 3 && g.has_edge(endpoint, start) && len > *best {
            *best = len;
        }
        if *best == g.n() || len + growth_bound(g, endpoint, visited) <= *best {
            return;
        }
        let above = !0u64 << (start + 1);
        let mut ext = g.neighbors(endpoint).0 & !visited & above;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            dfs(g, start, w, visited | 1 << w, len + 1, best);
        }
    }
    let mut best = 0;
    for s in 0..g.n() {
        dfs(g, s, s, 1 << s, 1, &mut best);
        if best == g.n() {
            break;
        }
    }
    best
}

/// Length of a longest cycle (0 if the graph is acyclic), without witness
/// reconstruction.
pub fn longest_cycle_len(g: &Graph) -> Result<usize> {
    check_size(g)?;
    if g.n() < 3 {
        return Ok(0);
    }
    Ok(if g.n() <= DP_CAP {
        cycle_len_dp(g)
    } else {
        cycle_len_bb(g)
    })
}

// ============================================================================
// Witness reconstruction
// ============================================================================

/// First path of exactly `target` vertices in ascending exploration order,
/// i.e. the lexicographically least one. The pruning bound never cuts a
/// branch that could still reach `target`, so it does not affect which path
/// is found first.
fn lex_path(g: &Graph, target: usize) -> Vec<usize> {
    fn dfs(g: &Graph, path: &mut Vec<usize>, visited: u64, target: usize) -> bool {
        if path.len() == target {
            return true;
        }
        let endpoint = *path.last().expect("nonempty");
        if path.len() + growth_bound(g, endpoint, visited) < target {
            return false;
        }
        let mut ext = g.neighbors(endpoint).0 & !visited;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            path.push(w);
            if dfs(g, path, visited | 1 << w, target) {
                return true;
            }
            path.pop();
        }
        false
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        if dfs(g, &mut path, 1 << s, target) {
            return path;
        }
    }
    unreachable!("a path of the optimal length must exist");
}

/// First cycle of exactly `target` vertices whose sequence starts at its
/// smallest vertex, in ascending exploration order.
fn lex_cycle(g: &Graph, target: usize) -> Vec<usize> {
    fn dfs(g: &Graph, start: usize, path: &mut Vec<usize>, visited: u64, target: usize) -> bool {
        let endpoint = *path.last().expect("nonempty");
        if path.len() == target {
            return g.has_edge(endpoint, start);
        }
        if path.len() + growth_bound(g, endpoint, visited) < target {
            return false;
        }
        let above = !0u64 << (start + 1);
        let mut ext = g.neighbors(endpoint).0 & !visited & above;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            path.push(w);
            if dfs(g, start, path, visited | 1 << w, target) {
                return true;
            }
            path.pop();
        }
        false
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        if dfs(g, s, &mut path, 1 << s, target) {
            return path;
        }
    }
    unreachable!("a cycle of the optimal length must exist");
}

// ============================================================================
// Public search entry points
// ============================================================================

/// Longest path: its vertex count and the lexicographically least witness.
pub fn longest_path(g: &Graph) -> Result<(usize, VertexSequence)> {
    let len = longest_path_len(g)?;
    let witness = VertexSequence::path(g, lex_path(g, len))?;
    debug_assert_eq!(witness.len(), len);
    Ok((len, witness))
}

/// Longest cycle: its vertex count (0 for acyclic graphs) and, when one
/// exists, the lexicographically least witness starting at its smallest
/// vertex.
pub fn longest_cycle(g: &Graph) -> Result<(usize, Option<VertexSequence>)> {
    let len = longest_cycle_len(g)?;
    if len == 0 {
        return Ok((0, None));
    }
    let witness = VertexSequence::cycle(g, lex_cycle(g, len))?;
    debug_assert_eq!(witness.len(), len);
    Ok((len, Some(witness)))
}

/// Whether G has a cycle through all n vertices. Requires n ≥ 3.
pub fn has_hamiltonian_cycle(g: &Graph) -> Result<bool> {
    if g.n() < 3 {
        return Err(Error::arg(format!(
            "hamiltonian cycles need n >= 3, got n = {}",
            g.n()
        )));
    }
    Ok(longest_cycle_len(g)? == g.n())
}
