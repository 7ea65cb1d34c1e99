//! Peeling low-degree vertices and dense typical r-edges off a graph.
//!
//! A vertex is removed when its degree in the current graph `G_i` is at most
//! `(1/2 - xi^2)(|G_i| - 1)`; a pair `{u, v}` is removed when `uv` is a
//! typical r-edge of the template and `|N(u) ∩ N(v)|` in `G_i` is at least
//! `2 xi^2 (|G_i| - 2)`. Typicality is measured in the template on `K_n`.

use num_rational::{BigRational, Rational64};

use super::{big, int};
use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, mask_iter, Edge, Graph, VertexMask};
use crate::templates::Template;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeelKind {
    Single,
    Pair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub step: usize,
    pub kind: PeelKind,
    pub vertices: Vec<usize>,
    /// `|G_i|` before the removal.
    pub order: usize,
    /// Degree (single) or common-neighbourhood size (pair) in `G_i`.
    pub witness: usize,
    pub threshold: BigRational,
    /// Rainbow triangles of the template through the pair; zero for singles.
    pub rainbow_through: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualStats {
    pub order: usize,
    pub edges: usize,
    /// r-edges of the template with both ends in the residual.
    pub r_edges: usize,
    pub typical_r_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelTrace {
    pub removed: Vec<PeelStep>,
    pub alive: VertexMask,
    pub residual: Graph,
    pub stats: ResidualStats,
}

impl PeelTrace {
    /// The removed vertices in removal order.
    pub fn removed_vertices(&self) -> Vec<usize> {
        self.removed.iter().flat_map(|s| s.vertices.iter().copied()).collect()
    }
}

struct Rules {
    single: BigRational,
    pair: BigRational,
    typical: Vec<Edge>,
}

impl Rules {
    fn new(xi: Rational64) -> Result<Rules> {
        let xi = big(xi);
        if xi <= int(0) || xi >= int(1) {
            return Err(Error::InvalidParameter("xi must lie in (0, 1)".into()));
        }
        let sq = &xi * &xi;
        Ok(Rules {
            single: int(1) / int(2) - &sq,
            pair: int(2) * sq,
            typical: Vec::new(),
        })
    }

    fn single_threshold(&self, order: usize) -> BigRational {
        &self.single * int(order.saturating_sub(1))
    }

    fn pair_threshold(&self, order: usize) -> BigRational {
        &self.pair * int(order.saturating_sub(2))
    }

    /// The step the algorithm takes on `alive`, if any.
    fn next(
        &self,
        g: &Graph,
        p: &Template,
        alive: VertexMask,
    ) -> Option<(PeelKind, Vec<usize>, usize, BigRational, u64)> {
        let order = alive.count_ones() as usize;
        let single = self.single_threshold(order);
        for v in mask_iter(alive) {
            let d = (g.neighbors(v) & alive).count_ones() as usize;
            if int(d) <= single {
                return Some((PeelKind::Single, vec![v], d, single, 0));
            }
        }
        let pair = self.pair_threshold(order);
        for &e in &self.typical {
            if alive & bit(e.u) == 0 || alive & bit(e.v) == 0 {
                continue;
            }
            let common = (g.neighbors(e.u) & g.neighbors(e.v) & alive).count_ones() as usize;
            if int(common) >= pair {
                return Some((PeelKind::Pair, vec![e.u, e.v], common, pair, p.rainbow_through(e)));
            }
        }
        None
    }
}

pub fn peel(g: &Graph, p: &Template, xi: Rational64) -> Result<PeelTrace> {
    let n = g.order();
    if p.order() != n {
        return Err(Error::InvalidInput(format!(
            "template order {} differs from graph order {n}",
            p.order()
        )));
    }
    let mut rules = Rules::new(xi)?;
    let r_edges = p.r_edges();
    rules.typical = r_edges.typical.clone();

    let mut alive = full_mask(n);
    let mut removed = Vec::new();
    while let Some((kind, vertices, witness, threshold, rainbow_through)) = rules.next(g, p, alive) {
        let order = alive.count_ones() as usize;
        for &v in &vertices {
            alive &= !bit(v);
        }
        removed.push(PeelStep {
            step: removed.len(),
            kind,
            vertices,
            order,
            witness,
            threshold,
            rainbow_through,
        });
    }
    let inside = |e: &&Edge| alive & bit(e.u) != 0 && alive & bit(e.v) != 0;
    let residual = g.induced(alive);
    let stats = ResidualStats {
        order: alive.count_ones() as usize,
        edges: residual.edge_count(),
        r_edges: r_edges.all.iter().filter(inside).count(),
        typical_r_edges: r_edges.typical.iter().filter(inside).count(),
    };
    Ok(PeelTrace {
        removed,
        alive,
        residual,
        stats,
    })
}

/// Replays a trace: every recorded witness is recomputed from the vertex set
/// before its step and must satisfy its trigger, and no trigger may fire on
/// the final residual.
pub fn verify_trace(g: &Graph, p: &Template, xi: Rational64, trace: &PeelTrace) -> Result<bool> {
    let mut rules = Rules::new(xi)?;
    rules.typical = p.r_edges().typical;
    let mut alive = full_mask(g.order());
    for step in &trace.removed {
        let order = alive.count_ones() as usize;
        if step.order != order || step.vertices.iter().any(|&v| alive & bit(v) == 0) {
            return Ok(false);
        }
        let ok = match (step.kind, step.vertices.as_slice()) {
            (PeelKind::Single, &[v]) => {
                let d = (g.neighbors(v) & alive).count_ones() as usize;
                d == step.witness && int(d) <= rules.single_threshold(order)
            }
            (PeelKind::Pair, &[u, v]) => {
                let common = (g.neighbors(u) & g.neighbors(v) & alive).count_ones() as usize;
                rules.typical.contains(&Edge::new(u, v))
                    && common == step.witness
                    && int(common) >= rules.pair_threshold(order)
            }
            _ => false,
        };
        if !ok {
            return Ok(false);
        }
        for &v in &step.vertices {
            alive &= !bit(v);
        }
    }
    Ok(alive == trace.alive && rules.next(g, p, alive).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::templates::Palette;

    fn q(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn complete_graph_two_color_template() {
        let g = Graph::complete(8).unwrap();
        let p = Template::uniform(8, 3, Palette::from_colors(&[1, 2])).unwrap();
        let trace = peel(&g, &p, q(1, 4)).unwrap();
        assert!(trace.removed.is_empty());
        assert_eq!(trace.residual, g);
        assert!(verify_trace(&g, &p, q(1, 4), &trace).unwrap());
    }

    #[test]
    fn star_peels_down_to_a_path() {
        let star = Graph::from_edges(10, &(1..10).map(|v| (0, v)).collect::<Vec<_>>()).unwrap();
        let p = Template::full(10, 3).unwrap();
        let trace = peel(&star, &p, q(1, 10)).unwrap();
        assert!(trace
            .removed
            .iter()
            .all(|s| s.kind == PeelKind::Single && s.witness == 1));
        assert_eq!(trace.removed_vertices(), (1..8).collect::<Vec<_>>());
        // At three vertices a leaf has degree 1 > 0.49 * 2.
        assert_eq!(trace.stats.order, 3);
        assert_eq!(trace.stats.edges, 2);
        assert!(verify_trace(&star, &p, q(1, 10), &trace).unwrap());
    }

    #[test]
    fn full_template_on_k6_removes_nothing() {
        let g = Graph::complete(6).unwrap();
        let p = Template::full(6, 4).unwrap();
        assert_eq!(p.rainbow_through(Edge::new(0, 1)), 96);
        let trace = peel(&g, &p, q(2, 5)).unwrap();
        assert!(trace.removed.is_empty());
        assert_eq!(trace.stats.r_edges, 15);
        assert_eq!(trace.stats.typical_r_edges, 0);
    }

    #[test]
    fn typical_pair_trigger() {
        // One full pair, {1} elsewhere: 0-1 is a typical r-edge with codegree 4.
        let g = Graph::complete(6).unwrap();
        let p = Template::uniform(6, 3, Palette::from_colors(&[1]))
            .unwrap()
            .with_palette(Edge::new(0, 1), Palette::full(3))
            .unwrap();
        let trace = peel(&g, &p, q(1, 2)).unwrap();
        let first = &trace.removed[0];
        assert_eq!(first.kind, PeelKind::Pair);
        assert_eq!(first.vertices, vec![0, 1]);
        assert_eq!(first.witness, 4);
        assert!(verify_trace(&g, &p, q(1, 2), &trace).unwrap());

        let mut forged = trace.clone();
        forged.removed[0].witness = 5;
        assert!(!verify_trace(&g, &p, q(1, 2), &forged).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let g = Graph::complete(4).unwrap();
        assert!(peel(&g, &Template::full(5, 3).unwrap(), q(1, 2)).is_err());
        assert!(peel(&g, &Template::full(4, 3).unwrap(), q(1, 1)).is_err());
        assert!(peel(&g, &Template::full(4, 3).unwrap(), q(0, 1)).is_err());
    }
}
