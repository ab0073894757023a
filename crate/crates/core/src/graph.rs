//! Undirected simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so neighborhood
//! intersection, independence tests, and degree counts are single machine
//! operations. Edges are symmetric and irreflexive by construction; every
//! constructor and mutator maintains both invariants.

use crate::error::{Error, Result};
use std::fmt;

/// Hard cap on vertex count: one bit row must fit in a machine word.
pub const MAX_VERTICES: usize = 64;

// ============================================================================
// Vertex sets
// ============================================================================

/// A set of vertices, stored as a 64-bit mask (bit `v` ⇔ vertex `v`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The set {0, 1, …, n−1}.
    #[inline]
    pub fn below(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

// ============================================================================
// Graphs
// ============================================================================

/// An undirected simple graph with vertices 0..n, n ≤ 64.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` exceeds [`MAX_VERTICES`]; fallible entry points (parsing,
    /// joins, family constructors) check capacity before calling this.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph { n, rows: vec![0; n] }
    }

    /// Graph with the given vertex count and edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::arg(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::below(self.n)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Adds the edge {u, v}. Idempotent.
    ///
    /// # Panics
    /// If `u == v` or either endpoint is out of range.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.rows[u]).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True if every pair of distinct vertices in `s` is nonadjacent.
    /// Vertices outside the graph make the set invalid.
    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        if !s.is_subset_of(self.vertex_set()) {
            return false;
        }
        s.iter().all(|v| self.rows[v] & s.0 == 0)
    }

    /// True if the graph is connected. The empty graph and K_1 count as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all = self.vertex_set().0;
        let mut reached = 1u64; // start from vertex 0
        loop {
            let mut frontier = 0u64;
            let mut bits = reached;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                frontier |= self.rows[v];
            }
            let next = reached | frontier;
            if next == reached {
                return reached == all;
            }
            reached = next;
        }
    }

    /// Asserts the representation invariants; used by debug builds after
    /// construction from untrusted input.
    pub(crate) fn debug_validate(&self) {
        debug_assert_eq!(self.rows.len(), self.n);
        let all = self.vertex_set().0;
        for u in 0..self.n {
            debug_assert_eq!(self.rows[u] & !all, 0, "edge past vertex count");
            debug_assert_eq!(self.rows[u] >> u & 1, 0, "loop at {u}");
            for v in VertexSet(self.rows[u]).iter() {
                debug_assert!(self.rows[v] >> u & 1 == 1, "asymmetric edge ({u}, {v})");
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ============================================================================
// Standard families
// ============================================================================

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Edgeless graph on n vertices.
pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

/// Path 0 − 1 − … − (n−1).
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle 0 − 1 − … − (n−1) − 0. Requires n ≥ 3.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// Complete bipartite graph K_{a,b}: side A = 0..a, side B = a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    join(&empty(a), &empty(b))
}

/// Join G ∨ H: disjoint union plus every edge between the two sides.
/// Vertices of `g` keep their labels; vertices of `h` are shifted by `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n() + h.n();
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count of join",
            requested: n,
            limit: MAX_VERTICES,
        });
    }
    let mut out = Graph::new(n);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(g.n() + u, g.n() + v);
    }
    for u in 0..g.n() {
        for v in g.n()..n {
            out.add_edge(u, v);
        }
    }
    out.debug_validate();
    Ok(out)
}

/// The boundary example K_{t−3,t−1} for a given t ≥ 5: the connected graph
/// on n = 2t−4 vertices whose minimum nonadjacent-pair degree sum lands
/// exactly on ((t−3)/(t−2))·n while it has neither a Hamiltonian path nor an
/// induced K_{1,t}.
pub fn sharpness_family(t: usize) -> Result<Graph> {
    if t < 5 {
        return Err(Error::arg(format!("t must be at least 5, got {t}")));
    }
    complete_bipartite(t - 3, t - 1)
}

/// H ∨ K̄_{t−1} for an arbitrary graph H on t−3 vertices: the general form of
/// the boundary graphs on n = 2t−4 vertices. `sharpness_family(t)` is the
/// special case H = K̄_{t−3}.
pub fn equality_family(h: &Graph, t: usize) -> Result<Graph> {
    if t < 5 {
        return Err(Error::arg(format!("t must be at least 5, got {t}")));
    }
    if h.n() != t - 3 {
        return Err(Error::arg(format!(
            "H must have t - 3 = {} vertices, got {}",
            t - 3,
            h.n()
        )));
    }
    join(h, &empty(t - 1))
}

// ============================================================================
// Tests
// ============================================================================
