//! Small simple graphs with bit-vector adjacency rows.
//!
//! Vertices are `0..n` and `n <= 64`, so each adjacency row is a single `u64`.
//! Pairs `u < v` are indexed lexicographically; the same indexing is used for
//! colorings (restricted to the edges present) and for templates (all pairs).

mod canonical;
mod enumerate;
mod graph6;
mod stats;

pub use canonical::{canonical_form, CanonicalForm, MAX_CANONICAL_ORDER};
pub use enumerate::{all_graphs, MAX_ENUMERATION_ORDER};
pub use graph6::{graph6_decode, graph6_encode, MAX_GRAPH6_ORDER};
pub use stats::{
    booksize, count_cliques, lovasz_triangle_bound, max_k_partite_edges, t_far, triangle_count, triangles,
    MAX_PARTITE_ORDER,
};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest order representable with one `u64` adjacency row per vertex.
pub const MAX_ORDER: usize = 64;

/// A set of vertices as a bit mask.
pub type VertexMask = u64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn full_mask(n: usize) -> VertexMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask from lowest to highest.
pub fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// `C(n, 2)`.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the pair in normalized order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// Position of this pair in the lexicographic order of all pairs of `[n]`.
    #[inline]
    pub fn index(self, n: usize) -> usize {
        edge_index(n, self.u, self.v)
    }

    pub fn touches(self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Lexicographic index of the pair `{a, b}` among all pairs of `[n]`.
#[inline]
pub fn edge_index(n: usize, a: usize, b: usize) -> usize {
    let (u, v) = if a < b { (a, b) } else { (b, a) };
    debug_assert!(v < n && u != v);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Inverse of [`edge_index`].
pub fn edge_at(n: usize, index: usize) -> Edge {
    debug_assert!(index < pair_count(n));
    let mut rest = index;
    let mut u = 0;
    while rest >= n - u - 1 {
        rest -= n - u - 1;
        u += 1;
    }
    Edge { u, v: u + 1 + rest }
}

/// All pairs of `[n]` in index order.
pub fn all_pairs(n: usize) -> impl Iterator<Item = Edge> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| Edge { u, v }))
}

/// A simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph order must be at least 1".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidParameter(format!(
                "graph order {n} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge {a}-{b} has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            if g.has_edge(a, b) {
                return Err(Error::InvalidInput(format!("repeated edge {a}-{b}")));
            }
            g.insert(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric, loop-free
    /// and confined to `0..n`.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        let g = Graph::empty(n)?;
        let mask = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 || row & bit(v) != 0 {
                return Err(Error::InvalidInput(format!("bad adjacency row for vertex {v}")));
            }
            for w in mask_iter(row) {
                if adj[w] & bit(v) == 0 {
                    return Err(Error::InvalidInput(format!("adjacency not symmetric at {v}-{w}")));
                }
            }
        }
        Ok(Graph { adj, ..g })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter(
                "complete bipartite parts must be non-empty".into(),
            ));
        }
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.insert(u, v);
            }
        }
        Ok(g)
    }

    /// `q` triangles sharing the base edge `0-1`; pages are `2..q+2`.
    pub fn book(q: usize) -> Result<Self> {
        let mut g = Graph::empty(q + 2)?;
        g.insert(0, 1);
        for p in 2..q + 2 {
            g.insert(0, p);
            g.insert(1, p);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.insert(v, (v + 1) % n);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Number of common neighbours of `u` and `v`.
    #[inline]
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        (self.adj[u] & self.adj[v]).count_ones() as usize
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in mask_iter(self.adj[u] & !full_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|u| mask_iter(self.adj[u] & !full_mask(u + 1)).all(|v| self.adj[u] & self.adj[v] == 0))
    }

    /// Copy with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.insert(u, v);
        g
    }

    /// Copy with edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove(u, v);
        g
    }

    /// The subgraph induced by `keep`, with vertex labels unchanged; vertices
    /// outside `keep` become isolated.
    pub fn induced(&self, keep: VertexMask) -> Graph {
        let adj = (0..self.n)
            .map(|v| if keep & bit(v) != 0 { self.adj[v] & keep } else { 0 })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Number of edges with both endpoints in `keep`.
    pub fn edge_count_within(&self, keep: VertexMask) -> usize {
        mask_iter(keep)
            .map(|v| (self.adj[v] & keep).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidInput(
                "permutation length differs from graph order".into(),
            ));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for e in self.edges() {
            g.insert(perm[e.u], perm[e.v]);
        }
        Ok(g)
    }

    /// Plain edge-list text: an `n m` header followed by `u v` lines.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for e in edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    /// Parses the plain edge-list format written by [`Graph::to_edge_list`].
    /// Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut offset = 0;
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for line in text.split_inclusive('\n') {
            let line_start = offset;
            offset += line.len();
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::parse(line_start, "expected two integers"));
            }
            let a = usize::from_str(fields[0]).map_err(|e| Error::parse(line_start, e.to_string()))?;
            let b = usize::from_str(fields[1]).map_err(|e| Error::parse(line_start, e.to_string()))?;
            if header.is_none() {
                if a == 0 {
                    return Err(Error::parse(line_start, "graph order must be at least 1"));
                }
                header = Some((a, b));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or_else(|| Error::parse(0, "missing `n m` header"))?;
        if edges.len() != m {
            return Err(Error::parse(
                offset,
                format!("header promises {m} edges, found {}", edges.len()),
            ));
        }
        Graph::from_edges(n, &edges)
    }

    #[inline]
    fn insert(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// The graph families that can be built by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Book(usize),
    Cycle(usize),
    EdgeList { n: usize, edges: Vec<(usize, usize)> },
}

pub fn make_named(kind: &NamedGraph) -> Result<Graph> {
    match kind {
        NamedGraph::Complete(n) => Graph::complete(*n),
        NamedGraph::CompleteBipartite(a, b) => Graph::complete_bipartite(*a, *b),
        NamedGraph::Book(q) => Graph::book(*q),
        NamedGraph::Cycle(n) => Graph::cycle(*n),
        NamedGraph::EdgeList { n, edges } => Graph::from_edges(*n, edges),
    }
}
