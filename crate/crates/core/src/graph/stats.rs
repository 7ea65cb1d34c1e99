//! Structural statistics: triangles, books, cliques and k-partite distance.

use num_bigint::BigUint;

use super::{bit, full_mask, mask_iter, Graph};
use crate::error::{Error, Result};

/// Each triangle `a < b < c` exactly once, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.order() {
        let later = !full_mask(a + 1);
        for b in mask_iter(g.neighbors(a) & later) {
            let common = g.neighbors(a) & g.neighbors(b) & !full_mask(b + 1);
            out.extend(mask_iter(common).map(|c| [a, b, c]));
        }
    }
    out
}

pub fn triangle_count(g: &Graph) -> usize {
    let mut count = 0;
    for a in 0..g.order() {
        let later = !full_mask(a + 1);
        for b in mask_iter(g.neighbors(a) & later) {
            count += (g.neighbors(a) & g.neighbors(b) & !full_mask(b + 1)).count_ones() as usize;
        }
    }
    count
}

/// Size of the largest book: the maximum number of common neighbours over
/// the edges of `g`.
pub fn booksize(g: &Graph) -> usize {
    g.edges().into_iter().map(|e| g.codegree(e.u, e.v)).max().unwrap_or(0)
}

/// Number of `k`-vertex cliques.
pub fn count_cliques(g: &Graph, k: usize) -> BigUint {
    fn extend(g: &Graph, candidates: u64, remaining: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        if remaining == 1 {
            return candidates.count_ones() as u64;
        }
        mask_iter(candidates)
            .map(|v| extend(g, candidates & g.neighbors(v) & !full_mask(v + 1), remaining - 1))
            .sum()
    }
    BigUint::from(extend(g, full_mask(g.order()), k))
}

/// Orders beyond this are refused by [`max_k_partite_edges`].
pub const MAX_PARTITE_ORDER: usize = 14;

/// Maximum number of edges of a spanning `k`-partite subgraph (max `k`-cut),
/// by branch and bound over part assignments.
pub fn max_k_partite_edges(g: &Graph, k: usize) -> Result<usize> {
    let n = g.order();
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if n > MAX_PARTITE_ORDER {
        return Err(Error::ResourceLimit(format!(
            "max k-partite subgraph is limited to n <= {MAX_PARTITE_ORDER}, got {n}"
        )));
    }
    let m = g.edge_count();
    if k >= n || m == 0 {
        return Ok(m);
    }
    if k == 1 {
        return Ok(0);
    }
    // High-degree vertices first tightens the bound sooner.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut search = CutSearch {
        g,
        k,
        total: m,
        order,
        parts: vec![0; k],
        best: 0,
    };
    search.descend(0, 0, 0, 0, 0);
    Ok(search.best)
}

struct CutSearch<'a> {
    g: &'a Graph,
    k: usize,
    total: usize,
    order: Vec<usize>,
    parts: Vec<u64>,
    best: usize,
}

impl CutSearch<'_> {
    fn descend(&mut self, depth: usize, used_parts: usize, assigned: u64, kept: usize, seen: usize) {
        if self.best == self.total {
            return;
        }
        if depth == self.order.len() {
            self.best = self.best.max(kept);
            return;
        }
        let v = self.order[depth];
        let nbrs = self.g.neighbors(v);
        let seen_now = seen + (nbrs & assigned).count_ones() as usize;
        // Parts beyond the first unused one are symmetric to it.
        let limit = (used_parts + 1).min(self.k);
        for p in 0..limit {
            let lost = (nbrs & self.parts[p]).count_ones() as usize;
            let kept_now = kept + (nbrs & assigned).count_ones() as usize - lost;
            if kept_now + (self.total - seen_now) <= self.best {
                continue;
            }
            self.parts[p] |= bit(v);
            self.descend(depth + 1, used_parts.max(p + 1), assigned | bit(v), kept_now, seen_now);
            self.parts[p] &= !bit(v);
        }
    }
}

/// Whether `g` is `t`-far from `k`-partite: every spanning `k`-partite
/// subgraph misses at least `t` edges.
pub fn t_far(g: &Graph, k: usize, t: usize) -> Result<bool> {
    Ok(g.edge_count() - max_k_partite_edges(g, k)? >= t)
}

/// Upper bound on the triangle count of a graph with `m` edges: `C(x,3)`
/// where `C(x,2) = m`.
pub fn lovasz_triangle_bound(m: u64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let x = (1.0 + (1.0 + 8.0 * m as f64).sqrt()) / 2.0;
    x * (x - 1.0) * (x - 2.0) / 6.0
}
