#![allow(dead_code)]

use gallai::graph::Graph;
use gallai::templates::{Palette, Template};
use proptest::prelude::*;

pub fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 0..n {
            for b in a + 1..n {
                if bits[k] {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(graph_on)
}

pub fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1..=max_n).prop_flat_map(|n| (graph_on(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))
}

/// Palettes drawn from nonempty subsets of `[r]`.
pub fn template_on(n: usize, r: usize) -> impl Strategy<Value = Template> {
    prop::collection::vec(1u16..1 << r, n * n.saturating_sub(1) / 2)
        .prop_map(move |masks| Template::new(n, r, masks.into_iter().map(Palette::from_mask).collect()).unwrap())
}

/// Colorings of `g` as color vectors in `g.edges()` order.
pub fn for_each_coloring(m: usize, r: u8, mut visit: impl FnMut(&[u8])) {
    let mut colors = vec![1u8; m];
    loop {
        visit(&colors);
        let mut i = 0;
        loop {
            if i == m {
                return;
            }
            if colors[i] < r {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// Triangles of `g` as positions into `g.edges()`.
pub fn triangle_positions(g: &Graph) -> Vec<[usize; 3]> {
    let edges = g.edges();
    let pos = |a: usize, b: usize| edges.iter().position(|e| (e.u, e.v) == (a, b)).unwrap();
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push([pos(a, b), pos(a, c), pos(b, c)]);
                }
            }
        }
    }
    out
}

pub fn no_rainbow(colors: &[u8], tris: &[[usize; 3]]) -> bool {
    tris.iter()
        .all(|&[x, y, z]| colors[x] == colors[y] || colors[x] == colors[z] || colors[y] == colors[z])
}
