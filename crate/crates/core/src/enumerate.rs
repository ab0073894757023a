//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on n vertices are generated level by level: every graph on k+1
//! vertices arises from some graph on k vertices by adding one vertex joined
//! to a subset of the old ones (for connected graphs, a nonempty subset —
//! every connected graph has a vertex whose removal keeps it connected, so
//! the augmentation reaches everything). Children are reduced to canonical
//! keys and deduplicated, which collapses each isomorphism class to a single
//! representative.
//!
//! The expansion of a level is data-parallel (one batch of parents per task)
//! when the `parallel` feature is on; deduplication happens sequentially in
//! parent order either way, so the output order is deterministic.

use crate::canon::{canonical_key_rows, graph_from_key, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;
use std::hash::{BuildHasherDefault, Hasher};

/// Largest level the enumerator will build. One level higher than this is
/// feasible in principle (keys still fit a machine word) but the level no
/// longer fits in memory at desk scale.
pub const MAX_ENUM_VERTICES: usize = 10;

const _: () = assert!(MAX_ENUM_VERTICES <= MAX_CANON_VERTICES);

/// Parents expanded per task; large enough to amortize scheduling, small
/// enough to keep per-task output buffers modest.
const BATCH: usize = 256;
/// Batches deduplicated per pipeline round, bounding transient memory.
#[cfg(feature = "parallel")]
const ROUND: usize = 128;

// ----------------------------------------------------------------------------
// Key sets
// ----------------------------------------------------------------------------

/// Mixes the 64-bit key once (splitmix64); the default hasher is needlessly
/// slow for the hundreds of millions of probes a level-10 build performs.
#[derive(Default)]
struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn write(&mut self, _: &[u8]) {
        unreachable!("only u64 keys are hashed");
    }

    fn write_u64(&mut self, key: u64) {
        let mut z = key.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        self.0 = z ^ (z >> 31);
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

type KeySet = HashSet<u64, BuildHasherDefault<KeyHasher>>;

// ----------------------------------------------------------------------------
// Level expansion
// ----------------------------------------------------------------------------

/// Expands one batch of parent keys on `parent_n` vertices into the
/// canonical keys of all their children, in deterministic order (parent
/// order, then neighbor subset ascending). Not yet deduplicated.
fn expand_batch(parents: &[u64], parent_n: usize, connected: bool) -> Vec<u64> {
    let child_n = parent_n + 1;
    let first_subset = if connected { 1u64 } else { 0 };
    let subsets = 1u64 << parent_n;
    let mut out = Vec::with_capacity(parents.len() * (subsets - first_subset) as usize);
    let mut rows = [0u64; MAX_CANON_VERTICES];
    let mut parent_rows = [0u64; MAX_CANON_VERTICES];
    for &pkey in parents {
        decode_rows(parent_n, pkey, &mut parent_rows);
        for s in first_subset..subsets {
            rows[..parent_n].copy_from_slice(&parent_rows[..parent_n]);
            rows[parent_n] = s;
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rows[v] |= 1 << parent_n;
            }
            out.push(canonical_key_rows(child_n, &rows[..child_n]));
        }
    }
    out
}

/// Decodes a column-order upper-triangle key into bit rows.
fn decode_rows(n: usize, key: u64, rows: &mut [u64; MAX_CANON_VERTICES]) {
    rows[..n].fill(0);
    let nbits = n * (n - 1) / 2;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (nbits - 1 - pos) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            pos += 1;
        }
    }
}

/// Builds level `parent_n + 1` from a full parent level: one key per
/// isomorphism class, in deterministic first-seen order.
fn level_up(parents: &[u64], parent_n: usize, connected: bool) -> Vec<u64> {
    let mut seen = KeySet::default();
    let mut out = Vec::new();
    let mut push_batch = |keys: Vec<u64>| {
        for key in keys {
            if seen.insert(key) {
                out.push(key);
            }
        }
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        for round in parents.chunks(BATCH * ROUND) {
            let expanded: Vec<Vec<u64>> = round
                .par_chunks(BATCH)
                .map(|batch| expand_batch(batch, parent_n, connected))
                .collect();
            expanded.into_iter().for_each(&mut push_batch);
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        for batch in parents.chunks(BATCH) {
            push_batch(expand_batch(batch, parent_n, connected));
        }
    }
    out
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::arg("enumeration starts at n = 1"));
    }
    if n > MAX_ENUM_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count for enumeration",
            requested: n,
            limit: MAX_ENUM_VERTICES,
        });
    }
    Ok(())
}

// ----------------------------------------------------------------------------
// Public entry points
// ----------------------------------------------------------------------------

/// Canonical keys of all connected graphs on exactly `n` vertices, one per
/// isomorphism class, in deterministic order.
pub fn connected_graph_keys(n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    let mut level = vec![0u64]; // K_1
    for k in 1..n {
        level = level_up(&level, k, true);
    }
    Ok(level)
}

/// Canonical keys of all graphs (connected or not) on exactly `n` vertices.
pub fn all_graph_keys(n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    let mut level = vec![0u64];
    for k in 1..n {
        level = level_up(&level, k, false);
    }
    Ok(level)
}

/// All connected graphs on exactly `n` vertices, decoded.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graph_keys(n)?
        .into_iter()
        .map(|k| graph_from_key(n, k))
        .collect())
}

/// All graphs on exactly `n` vertices, decoded.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graph_keys(n)?
        .into_iter()
        .map(|k| graph_from_key(n, k))
        .collect())
}

/// Streaming iterator over every graph of a family for n = 1..=n_max,
/// holding one level of canonical keys at a time.
pub struct GraphStream {
    connected: bool,
    n_max: usize,
    current_n: usize,
    keys: Vec<u64>,
    pos: usize,
}

impl GraphStream {
    fn new(n_max: usize, connected: bool) -> Result<Self> {
        check_n(n_max)?;
        Ok(GraphStream {
            connected,
            n_max,
            current_n: 1,
            keys: vec![0],
            pos: 0,
        })
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if self.pos < self.keys.len() {
                let g = graph_from_key(self.current_n, self.keys[self.pos]);
                self.pos += 1;
                return Some(g);
            }
            if self.current_n >= self.n_max {
                return None;
            }
            self.keys = level_up(&self.keys, self.current_n, self.connected);
            self.current_n += 1;
            self.pos = 0;
        }
    }
}

/// Every connected graph up to isomorphism with 1 ≤ n ≤ n_max.
pub fn connected_graphs_up_to(n_max: usize) -> Result<GraphStream> {
    GraphStream::new(n_max, true)
}

/// Every graph up to isomorphism with 1 ≤ n ≤ n_max.
pub fn all_graphs_up_to(n_max: usize) -> Result<GraphStream> {
    GraphStream::new(n_max, false)
}
