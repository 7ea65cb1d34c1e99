//! Edges colored outside a reference pair and their matching number.

use super::Coloring;
use crate::error::{Error, Result};
use crate::graph::{bit, mask_iter, Edge, Graph};

/// Edges colored outside `{i, j}` and the size of a maximum matching among
/// them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SDeviation {
    pub pair: (u8, u8),
    pub s_edges: Vec<Edge>,
    pub matching_size: usize,
}

pub fn s_deviation(g: &Graph, c: &Coloring, i: u8, j: u8) -> Result<SDeviation> {
    if i == j || i == 0 || j == 0 || i as usize > c.r() || j as usize > c.r() {
        return Err(Error::InvalidParameter(format!(
            "reference colors must be distinct and in 1..={}, got {i} and {j}",
            c.r()
        )));
    }
    if !c.covers(g) {
        return Err(Error::InvalidInput("coloring is not total on E(G)".into()));
    }
    let s_edges: Vec<Edge> = c
        .iter()
        .filter(|&(_, col)| col != i && col != j)
        .map(|(e, _)| e)
        .collect();
    let matching_size = maximum_matching_size(&s_edges);
    Ok(SDeviation {
        pair: (i.min(j), i.max(j)),
        s_edges,
        matching_size,
    })
}

/// Maximum matching size by branching on the lowest vertex that still has an
/// edge: it is either left unmatched or matched to one of its neighbours.
pub fn maximum_matching_size(edges: &[Edge]) -> usize {
    let mut adj = [0u64; 64];
    for e in edges {
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
    }
    let live = adj
        .iter()
        .enumerate()
        .fold(0u64, |m, (v, &row)| if row != 0 { m | bit(v) } else { m });
    let mut best = 0;
    branch(&adj, live, 0, &mut best);
    best
}

fn branch(adj: &[u64; 64], alive: u64, size: usize, best: &mut usize) {
    // Vertices still able to be matched.
    let mut active = 0u64;
    for v in mask_iter(alive) {
        if adj[v] & alive != 0 {
            active |= bit(v);
        }
    }
    if size + active.count_ones() as usize / 2 <= *best {
        return;
    }
    if active == 0 {
        *best = size;
        return;
    }
    let v = active.trailing_zeros() as usize;
    for w in mask_iter(adj[v] & active) {
        branch(adj, active & !bit(v) & !bit(w), size + 1, best);
    }
    branch(adj, active & !bit(v), size, best);
}
