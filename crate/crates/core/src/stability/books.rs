//! Book families and the book/bipartite dichotomy.

use num_rational::{BigRational, Rational64};
use num_traits::Signed;

use super::{big, int};
use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, mask_iter, Edge, Graph, VertexMask};

/// A base edge and the common neighbours of its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Book {
    pub base: Edge,
    pub pages: Vec<usize>,
}

impl Book {
    /// Base plus two edges per page.
    pub fn edge_set(&self) -> Vec<Edge> {
        let mut out = vec![self.base];
        for &p in &self.pages {
            out.push(Edge::new(self.base.u, p));
            out.push(Edge::new(self.base.v, p));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookFamily {
    pub books: Vec<Book>,
    pub removed_bases: Vec<Edge>,
    pub residual: Graph,
}

/// The largest book of `g` (ties by lowest base), if `g` has an edge.
fn largest_book(g: &Graph) -> Option<Book> {
    let mut best: Option<(usize, Edge)> = None;
    for e in g.edges() {
        let size = g.codegree(e.u, e.v);
        if best.is_none_or(|(s, _)| size > s) {
            best = Some((size, e));
        }
    }
    best.map(|(_, base)| Book {
        base,
        pages: mask_iter(g.neighbors(base.u) & g.neighbors(base.v)).collect(),
    })
}

/// Repeatedly takes the largest book of size at least `threshold` and
/// deletes its base edge.
pub fn greedy_book_family(g: &Graph, threshold: usize) -> Result<BookFamily> {
    if threshold == 0 {
        return Err(Error::InvalidParameter("threshold must be at least 1".into()));
    }
    let mut current = g.clone();
    let mut books = Vec::new();
    while let Some(book) = largest_book(&current).filter(|b| b.pages.len() >= threshold) {
        current = current.without_edge(book.base.u, book.base.v);
        books.push(book);
    }
    let removed_bases = books.iter().map(|b| b.base).collect();
    Ok(BookFamily {
        books,
        removed_bases,
        residual: current,
    })
}

/// An induced bipartite subgraph given by its vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteCandidate {
    pub vertices: VertexMask,
    pub min_degree: usize,
}

impl BipartiteCandidate {
    pub fn order(&self) -> usize {
        self.vertices.count_ones() as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DichotomyResult {
    /// `bk(G) > (1/6 - 2 alpha^(1/3)) n`.
    Book { base: Edge, size: usize },
    /// Order at least `(1 - alpha^(1/3)) n` and minimum degree at least
    /// `(1/2 - 4 alpha^(1/3)) n`.
    Bipartite(BipartiteCandidate),
    /// Neither bound is met; the best candidates are kept for reporting.
    Neither {
        best_book: Option<(Edge, usize)>,
        best_bipartite: Option<BipartiteCandidate>,
    },
}

/// Largest order accepted by [`dichotomy_search`].
pub const MAX_DICHOTOMY_ORDER: usize = 12;

/// `x >= lhs - coef * alpha^(1/3)` for rationals, decided by cubing.
fn clears(x: &BigRational, lhs: &BigRational, coef: &BigRational, alpha: &BigRational) -> bool {
    let gap = lhs - x;
    if !gap.is_positive() {
        return true;
    }
    coef * coef * coef * alpha >= &gap * &gap * &gap
}

/// Exhaustive search for either a large book or a large induced bipartite
/// subgraph with high minimum degree.
pub fn dichotomy_search(g: &Graph, alpha: Rational64) -> Result<DichotomyResult> {
    let n = g.order();
    if n > MAX_DICHOTOMY_ORDER {
        return Err(Error::ResourceLimit(format!(
            "dichotomy search is limited to n <= {MAX_DICHOTOMY_ORDER}, got {n}"
        )));
    }
    if *alpha.numer() < 0 {
        return Err(Error::InvalidParameter("alpha must be non-negative".into()));
    }
    let alpha = big(alpha);
    let nn = int(n);

    let best_book = largest_book(g).map(|b| (b.base, b.pages.len()));
    if let Some((base, size)) = best_book {
        // size > (1/6 - 2a) n  iff  2 a n > n/6 - size.
        let gap = &nn / int(6) - int(size);
        let strict = gap.is_negative() || int(8) * &nn * &nn * &nn * &alpha > &gap * &gap * &gap;
        if strict {
            return Ok(DichotomyResult::Book { base, size });
        }
    }

    let mut qualifying: Option<BipartiteCandidate> = None;
    let mut best: Option<BipartiteCandidate> = None;
    for s in 1..=full_mask(n) {
        let Some(min_degree) = induced_bipartite_min_degree(g, s) else {
            continue;
        };
        let cand = BipartiteCandidate {
            vertices: s,
            min_degree,
        };
        let order_ok = clears(&int(cand.order()), &nn, &nn, &alpha);
        let degree_ok = clears(&int(min_degree), &(&nn / int(2)), &(int(4) * &nn), &alpha);
        let key = |c: &BipartiteCandidate| (c.min_degree, c.order());
        if order_ok && degree_ok && qualifying.as_ref().is_none_or(|q| key(&cand) > key(q)) {
            qualifying = Some(cand.clone());
        }
        if best.as_ref().is_none_or(|b| key(&cand) > key(b)) {
            best = Some(cand);
        }
    }
    Ok(match qualifying {
        Some(c) => DichotomyResult::Bipartite(c),
        None => DichotomyResult::Neither {
            best_book,
            best_bipartite: best,
        },
    })
}

/// Minimum degree of `g[s]` if it is bipartite.
fn induced_bipartite_min_degree(g: &Graph, s: VertexMask) -> Option<usize> {
    let mut side = 0u64;
    let mut seen = 0u64;
    for start in mask_iter(s) {
        if seen & bit(start) != 0 {
            continue;
        }
        seen |= bit(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in mask_iter(g.neighbors(v) & s) {
                let same = (side >> v & 1) == (side >> w & 1);
                if seen & bit(w) != 0 {
                    if same {
                        return None;
                    }
                    continue;
                }
                seen |= bit(w);
                if side & bit(v) == 0 {
                    side |= bit(w);
                }
                stack.push(w);
            }
        }
    }
    mask_iter(s).map(|v| (g.neighbors(v) & s).count_ones() as usize).min()
}
