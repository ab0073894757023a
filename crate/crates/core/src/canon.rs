//! Canonical labeling for small graphs (n ≤ 11).
//!
//! The canonical key of a graph is the minimum, over all vertex orderings,
//! of the upper-triangle adjacency bits read in column order and packed
//! big-endian into a single integer. Two graphs are isomorphic exactly when
//! their keys are equal, and a key decodes back to a concrete adjacency
//! matrix, so the key doubles as a compact storage form for the enumerator.
//!
//! The search places one vertex per level. Placing position k fixes the k
//! bits of column k (adjacency to the already-placed prefix), so the partial
//! string grows by a contiguous block per level and can be compared against
//! the best-known string as it grows. Three devices keep the tree small:
//! candidates at each level are scanned in ascending block order, so once a
//! block exceeds the best string the rest of the level is pruned; whenever a
//! block strictly improves on the best string, a greedy completion is locked
//! in immediately so later comparisons prune against a realistic bound; and
//! a candidate is skipped when a sibling already tried at the same level is
//! its twin (the transposition of the two is an automorphism, so the two
//! subtrees produce identical strings).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count whose upper triangle fits the 64-bit key.
pub const MAX_CANON_VERTICES: usize = 11;

#[inline]
fn tri(k: usize) -> usize {
    k * (k - 1) / 2
}

struct Canon<'a> {
    rows: &'a [u64],
    n: usize,
    nbits: usize,
    /// twin_mask[v] = vertices w ≠ v with N(v)∖{w} = N(w)∖{v}; swapping such
    /// a pair is an automorphism.
    twin_mask: [u16; MAX_CANON_VERTICES],
    best: u64,
}

impl Canon<'_> {
    /// Block of `best` that column `k` must match (k bits).
    #[inline]
    fn best_block(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.best >> (self.nbits - tri(k + 1)) & ((1 << k) - 1)
        }
    }

    /// Completes the ordering greedily (always the smallest next block) and
    /// returns the full string. Used to lock in an upper bound the moment a
    /// prefix strictly improves on `best`.
    fn greedy_complete(
        &self,
        mut k: usize,
        mut partial: u64,
        mut used: u16,
        sig: &[u16; MAX_CANON_VERTICES],
    ) -> u64 {
        let mut sig = *sig;
        while k < self.n {
            let mut pick = usize::MAX;
            let mut pick_bits = u16::MAX;
            for v in 0..self.n {
                if used >> v & 1 == 0 && sig[v] < pick_bits {
                    pick = v;
                    pick_bits = sig[v];
                }
            }
            partial = partial << k | pick_bits as u64;
            used |= 1 << pick;
            let row = self.rows[pick];
            for v in 0..self.n {
                if used >> v & 1 == 0 {
                    sig[v] = sig[v] << 1 | (row >> v & 1) as u16;
                }
            }
            k += 1;
        }
        partial
    }

    /// Explores position k. `partial` holds the first tri(k) bits and always
    /// equals the corresponding prefix of `best` (kept true by the lock-in
    /// rule), `used` is the set of placed original vertices, and `sig[v]` is
    /// the block vertex v would contribute if placed next.
    fn dfs(&mut self, k: usize, partial: u64, used: u16, sig: &[u16; MAX_CANON_VERTICES]) {
        if k == self.n {
            debug_assert_eq!(partial, self.best);
            return;
        }
        // Candidates in ascending (block, vertex) order.
        let mut cands: [(u16, u8); MAX_CANON_VERTICES] = [(0, 0); MAX_CANON_VERTICES];
        let mut count = 0;
        for v in 0..self.n {
            if used >> v & 1 == 0 {
                cands[count] = (sig[v], v as u8);
                count += 1;
            }
        }
        cands[..count].sort_unstable();

        let mut tried: u16 = 0;
        for &(bits, v) in &cands[..count] {
            let v = v as usize;
            if self.twin_mask[v] & tried != 0 {
                continue; // a twin sibling already covered this subtree
            }
            let best_block = self.best_block(k);
            if (bits as u64) > best_block {
                break; // sorted: every remaining candidate is worse
            }
            if (bits as u64) < best_block {
                self.best = self.greedy_complete(k, partial, used, sig);
                debug_assert_eq!(bits as u64, self.best_block(k));
            }
            tried |= 1 << v;
            let mut child_sig = *sig;
            let row = self.rows[v];
            for w in 0..self.n {
                if (used >> w & 1 == 0) && w != v {
                    child_sig[w] = child_sig[w] << 1 | (row >> w & 1) as u16;
                }
            }
            self.dfs(k + 1, partial << k | bits as u64, used | 1 << v, &child_sig);
        }
    }
}

/// Key computation on raw bit rows; the enumerator calls this in its inner
/// loop without building a `Graph` per candidate.
pub(crate) fn canonical_key_rows(n: usize, rows: &[u64]) -> u64 {
    debug_assert!(n <= MAX_CANON_VERTICES);
    debug_assert_eq!(rows.len(), n);
    if n <= 1 {
        return 0;
    }
    let mut twin_mask = [0u16; MAX_CANON_VERTICES];
    for v in 0..n {
        for w in 0..n {
            if v != w {
                let nv = rows[v] & !(1 << w);
                let nw = rows[w] & !(1 << v);
                if nv == nw {
                    twin_mask[v] |= 1 << w;
                }
            }
        }
    }
    let mut canon = Canon {
        rows,
        n,
        nbits: tri(n),
        twin_mask,
        best: 0,
    };
    canon.best = canon.greedy_complete(0, 0, 0, &[0; MAX_CANON_VERTICES]);
    canon.dfs(0, 0, 0, &[0; MAX_CANON_VERTICES]);
    canon.best
}

/// The canonical key of `g`: equal for isomorphic graphs, distinct otherwise.
pub fn canonical_key(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count for canonical labeling",
            requested: n,
            limit: MAX_CANON_VERTICES,
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.neighbors(v).0).collect();
    Ok(canonical_key_rows(n, &rows))
}

/// Decodes a canonical (or any) column-order upper-triangle key back into a
/// graph on `n` vertices.
pub fn graph_from_key(n: usize, key: u64) -> Graph {
    assert!(n <= MAX_CANON_VERTICES);
    let nbits = tri(n);
    debug_assert!(nbits == 64 || key >> nbits == 0, "key has stray bits");
    let mut g = Graph::new(n);
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (nbits - 1 - pos) & 1 == 1 {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    g
}

/// A canonically labeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_key(g.n(), canonical_key(g)?))
}

/// Isomorphism test via canonical keys.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.n() == h.n() && canonical_key(g)? == canonical_key(h)?)
}
