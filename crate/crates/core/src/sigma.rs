//! Minimum degree sums over independent vertex sets.
//!
//! σ_k(G) is the minimum of deg(v₁) + … + deg(v_k) over all sets of k
//! pairwise nonadjacent vertices. When no such set exists (e.g. k = 2 in a
//! complete graph) the value is [`SigmaValue::Undefined`], and every degree
//! condition quantified over such sets holds vacuously.
//!
//! All threshold comparisons stay in integer arithmetic: "σ₂ > ((t−3)/(t−2))·n"
//! is evaluated as (t−2)·σ₂ > (t−3)·n, so boundary cases are exact.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Value of σ_k: a finite minimum, or undefined because no independent set
/// of size k exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaValue {
    Finite(usize),
    Undefined,
}

impl SigmaValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            SigmaValue::Finite(s) => Some(s),
            SigmaValue::Undefined => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, SigmaValue::Finite(_))
    }
}

/// σ_k(G) for 1 ≤ k ≤ n.
///
/// Branch and bound over independent k-sets: candidates are scanned in
/// ascending degree order, and a branch is cut when even the k smallest
/// remaining degrees cannot beat the best sum found so far.
pub fn sigma_k(g: &Graph, k: usize) -> Result<SigmaValue> {
    if k == 0 || k > g.n() {
        return Err(Error::arg(format!(
            "k must satisfy 1 <= k <= n = {}, got {k}",
            g.n()
        )));
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    // prefix[i] = sum of the i smallest degrees among positions 0..i.
    let mut prefix = vec![0usize; degs.len() + 1];
    for (i, &d) in degs.iter().enumerate() {
        prefix[i + 1] = prefix[i] + d;
    }

    struct Search<'a> {
        g: &'a Graph,
        order: &'a [usize],
        degs: &'a [usize],
        prefix: &'a [usize],
        k: usize,
        best: Option<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, pos: usize, chosen: usize, sum: usize, blocked: u64) {
            if chosen == self.k {
                if self.best.map_or(true, |b| sum < b) {
                    self.best = Some(sum);
                }
                return;
            }
            let need = self.k - chosen;
            if self.order.len() - pos < need {
                return;
            }
            // Even the smallest degrees left cannot improve on the best sum.
            let optimistic = sum + (self.prefix[pos + need] - self.prefix[pos]);
            if let Some(b) = self.best {
                if optimistic >= b {
                    return;
                }
            }
            let v = self.order[pos];
            if blocked >> v & 1 == 0 {
                self.run(
                    pos + 1,
                    chosen + 1,
                    sum + self.degs[pos],
                    blocked | self.g.neighbors(v).0,
                );
            }
            self.run(pos + 1, chosen, sum, blocked);
        }
    }

    let mut search = Search {
        g,
        order: &order,
        degs: &degs,
        prefix: &prefix,
        k,
        best: None,
    };
    search.run(0, 0, 0, 0);
    Ok(match search.best {
        Some(s) => SigmaValue::Finite(s),
        None => SigmaValue::Undefined,
    })
}

/// σ₂(G), with k > n treated as Undefined so graphs on fewer than two
/// vertices satisfy every pair-degree hypothesis vacuously.
pub fn sigma2(g: &Graph) -> SigmaValue {
    if g.n() < 2 {
        SigmaValue::Undefined
    } else {
        sigma_k(g, 2).expect("k = 2 is in range")
    }
}

/// Whether σ₂(G) clears ((t−3)/(t−2))·n — strictly, or non-strictly when
/// `strict` is false. An undefined σ₂ satisfies either form vacuously.
pub fn meets_ore_hypothesis(g: &Graph, t: usize, strict: bool) -> bool {
    debug_assert!(t >= 5);
    match sigma2(g) {
        SigmaValue::Undefined => true,
        SigmaValue::Finite(s) => {
            let lhs = (t - 2) * s;
            let rhs = (t - 3) * g.n();
            if strict {
                lhs > rhs
            } else {
                lhs >= rhs
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, empty, path, Graph};

    /// Brute-force oracle: scan every k-subset.
    fn naive_sigma_k(g: &Graph, k: usize) -> SigmaValue {
        fn rec(g: &Graph, k: usize, start: usize, set: &mut Vec<usize>, best: &mut Option<usize>) {
            if set.len() == k {
                let ok = set
                    .iter()
                    .all(|&u| set.iter().all(|&v| u == v || !g.has_edge(u, v)));
                if ok {
                    let sum = set.iter().map(|&v| g.degree(v)).sum();
                    if best.map_or(true, |b| sum < b) {
                        *best = Some(sum);
                    }
                }
                return;
            }
            for v in start..g.n() {
                set.push(v);
                rec(g, k, v + 1, set, best);
                set.pop();
            }
        }
        let mut best = None;
        rec(g, k, 0, &mut Vec::new(), &mut best);
        match best {
            Some(s) => SigmaValue::Finite(s),
            None => SigmaValue::Undefined,
        }
    }

    #[test]
    fn sigma2_of_boundary_graph() {
        // K_{2,4}: the only nonadjacent pairs with minimum degree sum are two
        // degree-2 vertices on the large side.
        let g = complete_bipartite(2, 4).unwrap();
        assert_eq!(sigma_k(&g, 2).unwrap(), SigmaValue::Finite(4));
    }

    #[test]
    fn sigma2_of_short_path() {
        // P_3: the two endpoints are nonadjacent with degree 1 each.
        let g = path(3);
        assert_eq!(sigma_k(&g, 2).unwrap(), SigmaValue::Finite(2));
    }

    #[test]
    fn sigma_undefined_when_no_independent_set() {
        assert_eq!(sigma_k(&complete(4), 2).unwrap(), SigmaValue::Undefined);
        // C_5 has independent pairs but no independent triple.
        assert_eq!(sigma_k(&cycle(5), 3).unwrap(), SigmaValue::Undefined);
        assert_eq!(naive_sigma_k(&cycle(5), 3), SigmaValue::Undefined);
    }

    #[test]
    fn sigma_k_out_of_range() {
        let g = path(3);
        assert!(sigma_k(&g, 0).is_err());
        assert!(sigma_k(&g, 4).is_err());
        assert!(sigma_k(&empty(0), 1).is_err());
    }

    #[test]
    fn sigma1_is_min_degree() {
        let g = complete_bipartite(2, 4).unwrap();
        assert_eq!(sigma_k(&g, 1).unwrap(), SigmaValue::Finite(2));
        let h = path(5);
        assert_eq!(sigma_k(&h, 1).unwrap(), SigmaValue::Finite(1));
    }

    #[test]
    fn matches_oracle_on_assorted_graphs() {
        let graphs = vec![
            path(6),
            cycle(6),
            cycle(7),
            complete(5),
            empty(5),
            complete_bipartite(2, 4).unwrap(),
            complete_bipartite(3, 3).unwrap(),
            crate::graph::join(&complete(3), &empty(5)).unwrap(),
        ];
        for g in &graphs {
            for k in 1..=g.n() {
                assert_eq!(
                    sigma_k(g, k).unwrap(),
                    naive_sigma_k(g, k),
                    "sigma_{k} mismatch on {g:?}"
                );
            }
        }
    }

    #[test]
    fn ore_hypothesis_boundary_is_exact() {
        // K_{2,4} with t = 5: (t−2)·σ₂ = 3·4 = 12 = (t−3)·n = 2·6 exactly,
        // so the strict form fails and the non-strict form holds.
        let g = complete_bipartite(2, 4).unwrap();
        assert!(!meets_ore_hypothesis(&g, 5, true));
        assert!(meets_ore_hypothesis(&g, 5, false));
        // Complete graphs satisfy the hypothesis vacuously.
        assert!(meets_ore_hypothesis(&complete(4), 5, true));
        // K_1 and K_2 have no nonadjacent pair at all.
        assert!(meets_ore_hypothesis(&complete(1), 5, true));
        assert!(meets_ore_hypothesis(&complete(2), 5, true));
    }

    #[test]
    fn vacuous_sigma2_for_tiny_graphs() {
        assert_eq!(sigma2(&empty(1)), SigmaValue::Undefined);
        assert_eq!(sigma2(&empty(0)), SigmaValue::Undefined);
        assert_eq!(sigma2(&empty(2)), SigmaValue::Finite(0));
    }
}
