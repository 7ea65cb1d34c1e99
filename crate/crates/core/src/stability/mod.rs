//! Finitely checkable stability statements and the constructive steps used
//! in their proofs: majority colors, book families, the book/bipartite
//! dichotomy, peeling against a template, low-degree removal and clique
//! supersaturation.

mod books;
mod peel;

pub use books::{dichotomy_search, greedy_book_family, BipartiteCandidate, Book, BookFamily, DichotomyResult};
pub use peel::{peel, verify_trace, PeelKind, PeelStep, PeelTrace, ResidualStats};

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Rational64};
use num_traits::ToPrimitive;

use crate::counting::Coloring;
use crate::error::{Error, Result};
use crate::graph::{bit, count_cliques, edge_index, mask_iter, pair_count, t_far, triangles, Graph, VertexMask};
use crate::templates::Template;

pub(crate) fn big(q: Rational64) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

pub(crate) fn int(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityReport {
    pub mono_triangles: usize,
    /// `4/n - 4/n^2 <= eps < 1/2`.
    pub eps_in_range: bool,
    /// At least `(1 - eps) C(n,3)` monochromatic triangles.
    pub hypothesis_ok: bool,
    /// A most frequent color (lowest on ties).
    pub color: u8,
    /// `e(G)` minus the number of edges of `color`.
    pub deficit: usize,
    /// `deficit <= 4 r^2 eps C(n,2)`.
    pub conclusion_ok: bool,
}

pub fn majority_color_check(g: &Graph, c: &Coloring, eps: Rational64) -> Result<MajorityReport> {
    if !c.covers(g) {
        return Err(Error::InvalidInput("coloring is not total on E(G)".into()));
    }
    let n = g.order();
    let r = c.r();
    let mut by_pair = vec![0u8; pair_count(n)];
    for (e, col) in c.iter() {
        by_pair[e.index(n)] = col;
    }
    let mono_triangles = triangles(g)
        .into_iter()
        .filter(|&[a, b, d]| {
            let x = by_pair[edge_index(n, a, b)];
            x == by_pair[edge_index(n, a, d)] && x == by_pair[edge_index(n, b, d)]
        })
        .count();
    let mut per_color = vec![0usize; r + 1];
    for &col in c.colors() {
        per_color[col as usize] += 1;
    }
    let mut color = 1u8;
    for k in 2..=r {
        if per_color[k] > per_color[color as usize] {
            color = k as u8;
        }
    }
    let deficit = g.edge_count() - per_color[color as usize];

    // eps = p / q with q > 0; every comparison is cleared of denominators.
    let (p, q) = (*eps.numer() as i128, *eps.denom() as i128);
    let nn = n as i128;
    let c3 = (n * n.saturating_sub(1) * n.saturating_sub(2) / 6) as i128;
    let c2 = pair_count(n) as i128;
    let rr = r as i128;
    Ok(MajorityReport {
        mono_triangles,
        eps_in_range: (4 * nn - 4) * q <= p * nn * nn && 2 * p < q,
        hypothesis_ok: mono_triangles as i128 * q >= (q - p) * c3,
        color,
        deficit,
        conclusion_ok: deficit as i128 * q <= 4 * rr * rr * p * c2,
    })
}

/// Re-export of [`Template::two_palette_majority`].
pub fn two_palette_majority(p: &Template) -> ((u8, u8), usize) {
    p.two_palette_majority()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowDegreeResult {
    pub residual: Graph,
    /// Vertices still present.
    pub alive: VertexMask,
    pub removed_order: Vec<usize>,
    /// `e(G) <= e(G') + (C(n,2) - C(n',2)) / 2`.
    pub inequality_holds: bool,
}

/// Repeatedly deletes the lowest-indexed vertex of `candidates` whose degree
/// in the current graph is below half its order.
pub fn remove_low_degree(g: &Graph, candidates: VertexMask) -> Result<LowDegreeResult> {
    let n = g.order();
    if candidates & !crate::graph::full_mask(n) != 0 {
        return Err(Error::InvalidInput("candidate set is not a subset of V(G)".into()));
    }
    let mut alive = crate::graph::full_mask(n);
    let mut removed_order = Vec::new();
    loop {
        let size = alive.count_ones() as usize;
        let next = mask_iter(candidates & alive).find(|&v| 2 * ((g.neighbors(v) & alive).count_ones() as usize) < size);
        match next {
            Some(v) => {
                alive &= !bit(v);
                removed_order.push(v);
            }
            None => break,
        }
    }
    let residual = g.induced(alive);
    let n2 = alive.count_ones() as usize;
    let inequality_holds = 2 * g.edge_count() <= 2 * residual.edge_count() + pair_count(n) - pair_count(n2);
    debug_assert!(inequality_holds);
    Ok(LowDegreeResult {
        residual,
        alive,
        removed_order,
        inequality_holds,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SupersaturationReport {
    pub t_far: bool,
    /// `n^(k-1) / (e^(2k) k!) * (e(G) + t - (1 - 1/k) n^2 / 2)`.
    pub bound: f64,
    /// Copies of `K_(k+1)`.
    pub cliques: BigUint,
    pub ok: bool,
}

pub fn supersaturation_check(g: &Graph, k: usize, t: usize) -> Result<SupersaturationReport> {
    if k == 0 || t == 0 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 1 and t >= 1, got k={k}, t={t}"
        )));
    }
    let far = t_far(g, k, t)?;
    let n = g.order() as f64;
    let k_fact: f64 = (1..=k).map(|i| i as f64).product();
    let scale = n.powi(k as i32 - 1) / ((2.0 * k as f64).exp() * k_fact);
    let bound = scale * (g.edge_count() as f64 + t as f64 - (1.0 - 1.0 / k as f64) * n * n / 2.0);
    let cliques = count_cliques(g, k + 1);
    let ok = !far || cliques.to_f64().unwrap_or(f64::INFINITY) >= bound;
    Ok(SupersaturationReport {
        t_far: far,
        bound,
        cliques,
        ok,
    })
}
