//! Counting Gallai colorings: a pruned backtracking counter, a naive
//! enumeration oracle, closed-form bounds and coloring diagnostics.

mod backtrack;
mod bounds;
mod deviation;

pub use backtrack::{count_gallai, count_gallai_with, count_with_palettes};
pub use bounds::{
    asymptotic_bounds, asymptotic_crossover, book_gallai_count, lower_bound_two_color, red_once_count, AsymptoticBounds,
};
pub use deviation::{maximum_matching_size, s_deviation, SDeviation};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{edge_index, triangles, Edge, Graph};

/// Largest supported number of colors; palettes are `u16` masks.
pub const MAX_COLORS: usize = 16;

/// Work limits for the counters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountConfig {
    /// Largest `r^e(G)` the naive oracle will enumerate.
    pub leaf_budget: u64,
    /// Largest number of search nodes the pruned counter will visit.
    pub node_budget: u64,
    /// Search-tree levels expanded before splitting work across threads.
    pub fanout_depth: usize,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            leaf_budget: 100_000_000,
            node_budget: 1_000_000_000,
            fanout_depth: 3,
        }
    }
}

pub(crate) fn check_colors(r: usize) -> Result<()> {
    if r == 0 || r > MAX_COLORS {
        return Err(Error::InvalidParameter(format!(
            "number of colors must be in 1..={MAX_COLORS}, got {r}"
        )));
    }
    Ok(())
}

/// An edge coloring with colors `1..=r`, listed in lexicographic edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    r: usize,
    edges: Vec<Edge>,
    colors: Vec<u8>,
}

impl Coloring {
    /// Colors the edges of `g` (in `g.edges()` order) with `colors`.
    pub fn new(g: &Graph, r: usize, colors: Vec<u8>) -> Result<Self> {
        let edges = g.edges();
        if colors.len() != edges.len() {
            return Err(Error::InvalidInput(format!(
                "{} colors given for {} edges",
                colors.len(),
                edges.len()
            )));
        }
        Coloring::from_pairs(r, edges.into_iter().zip(colors).collect())
    }

    /// Colors an arbitrary set of pairs; the domain need not be a graph's
    /// whole edge set.
    pub fn from_pairs(r: usize, mut pairs: Vec<(Edge, u8)>) -> Result<Self> {
        check_colors(r)?;
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput("an edge is colored twice".into()));
        }
        if let Some((e, c)) = pairs.iter().find(|(_, c)| *c == 0 || *c as usize > r) {
            return Err(Error::InvalidInput(format!("edge {e} has color {c} outside 1..={r}")));
        }
        let (edges, colors) = pairs.into_iter().unzip();
        Ok(Coloring { r, edges, colors })
    }

    /// Every edge of `g` gets `color`.
    pub fn monochromatic(g: &Graph, r: usize, color: u8) -> Result<Self> {
        Coloring::new(g, r, vec![color; g.edge_count()])
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, u8)> + '_ {
        self.edges.iter().copied().zip(self.colors.iter().copied())
    }

    pub fn color_of(&self, e: Edge) -> Option<u8> {
        self.edges.binary_search(&e).ok().map(|i| self.colors[i])
    }

    /// Bit `c - 1` is set for every color `c` that appears.
    pub fn colors_used(&self) -> u16 {
        self.colors.iter().fold(0, |m, &c| m | 1 << (c - 1))
    }

    /// Whether the coloring is total on exactly `E(g)`.
    pub fn covers(&self, g: &Graph) -> bool {
        self.edges.len() == g.edge_count() && self.edges.iter().all(|e| g.has_edge(e.u, e.v))
    }
}

/// True iff no triangle of `g` has three distinct colors.
pub fn is_gallai(g: &Graph, c: &Coloring) -> Result<bool> {
    if !c.covers(g) {
        return Err(Error::InvalidInput("coloring is not total on E(G)".into()));
    }
    let n = g.order();
    let mut by_pair = vec![0u8; crate::graph::pair_count(n)];
    for (e, col) in c.iter() {
        by_pair[e.index(n)] = col;
    }
    Ok(triangles(g).into_iter().all(|[a, b, d]| {
        let x = by_pair[edge_index(n, a, b)];
        let y = by_pair[edge_index(n, a, d)];
        let z = by_pair[edge_index(n, b, d)];
        x == y || y == z || x == z
    }))
}

/// Exhaustive oracle: enumerates all `r^e(G)` colorings and tests each.
pub fn count_gallai_naive(g: &Graph, r: usize, cfg: &CountConfig) -> Result<BigUint> {
    check_colors(r)?;
    let m = g.edge_count();
    let leaves = (r as f64).powi(m as i32);
    if leaves > cfg.leaf_budget as f64 {
        return Err(Error::ResourceLimit(format!(
            "naive enumeration needs {r}^{m} leaves, budget is {}",
            cfg.leaf_budget
        )));
    }
    let edges = g.edges();
    let position = |a: usize, b: usize| edges.binary_search(&Edge::new(a, b)).unwrap();
    let tris: Vec<[usize; 3]> = triangles(g)
        .into_iter()
        .map(|[a, b, c]| [position(a, b), position(a, c), position(b, c)])
        .collect();
    let mut colors = vec![0u8; m];
    let mut count: u64 = 0;
    loop {
        if tris.iter().all(|&[x, y, z]| {
            let (x, y, z) = (colors[x], colors[y], colors[z]);
            x == y || y == z || x == z
        }) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == m {
                return Ok(BigUint::from(count));
            }
            colors[i] += 1;
            if (colors[i] as usize) < r {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}
