//! Canonical labeling by exhaustive minimization over vertex permutations.
//!
//! The canonical code of a graph is the smallest graph6 bit string over all
//! relabelings. Positions are fixed one at a time; placing position `j` fixes
//! column `j` of the upper triangle, so any branch whose prefix already
//! exceeds the best code found is cut.

use std::fmt;

use super::{graph6_decode, graph6_encode, pair_count, Graph};
use crate::error::{Error, Result};

/// Canonical codes are held in one `u64`, so `C(n,2) <= 64`; the factorial
/// worst case (edgeless or complete graphs) also stays tractable here.
pub const MAX_CANONICAL_ORDER: usize = 10;

/// Permutation-invariant encoding: the graph6 string of the canonical
/// relabeling. Equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative itself.
    pub fn graph(&self) -> Graph {
        graph6_decode(&self.0).expect("canonical form holds valid graph6")
    }

    /// Wraps a graph6 string after checking that it is already canonical.
    pub fn from_graph6(text: &str) -> Result<Self> {
        let g = graph6_decode(text)?;
        let form = canonical_form(&g)?;
        if form.0 != text.trim_end() {
            return Err(Error::InvalidInput(format!("{text:?} is not in canonical form")));
        }
        Ok(form)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({:?})", self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let (_, perm) = canonical_code(g)?;
    Ok(CanonicalForm(graph6_encode(&apply_inverse(g, &perm))))
}

/// Minimal code and the order of original vertices realizing it
/// (`order[p]` is the original vertex placed at position `p`).
pub(crate) fn canonical_code(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::ResourceLimit(format!(
            "canonical form is limited to n <= {MAX_CANONICAL_ORDER}, got {n}"
        )));
    }
    let mut search = Search {
        g,
        total_bits: pair_count(n) as u32,
        best: u64::MAX,
        best_order: (0..n).collect(),
        order: Vec::with_capacity(n),
        found: false,
    };
    search.descend(0, 0);
    Ok((search.best, search.best_order))
}

fn apply_inverse(g: &Graph, order: &[usize]) -> Graph {
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm).expect("order is a permutation")
}

struct Search<'a> {
    g: &'a Graph,
    total_bits: u32,
    best: u64,
    best_order: Vec<usize>,
    order: Vec<usize>,
    found: bool,
}

impl Search<'_> {
    fn descend(&mut self, used: u64, code: u64) {
        let j = self.order.len();
        let n = self.g.order();
        if j == n {
            if !self.found || code < self.best {
                self.best = code;
                self.best_order.clone_from(&self.order);
                self.found = true;
            }
            return;
        }
        let prefix_bits = (j * (j + 1) / 2) as u32;
        for v in 0..n {
            if used & (1 << v) != 0 {
                continue;
            }
            let row = self.g.neighbors(v);
            let mut next = code;
            for &w in &self.order {
                next = (next << 1) | ((row >> w) & 1);
            }
            if self.found {
                let shift = self.total_bits - prefix_bits;
                let best_prefix = if shift >= 64 { 0 } else { self.best >> shift };
                if next > best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.descend(used | (1 << v), next);
            self.order.pop();
        }
    }
}
