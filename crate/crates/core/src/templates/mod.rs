//! r-templates: a palette of allowed colors on every pair of `[n]`.
//!
//! A coloring of a graph is the template with a singleton palette on each
//! colored edge and an empty palette elsewhere. Templates carry the rainbow
//! triangle count `RT(P)`, the constrained Gallai count `Ga(P, G)`, triangle
//! classification and the weight-based entropy bound.

mod classify;
mod text;

pub use classify::{TriangleMode, TriangleTally};

use std::fmt;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::counting::{check_colors, count_with_palettes, Coloring, CountConfig};
use crate::error::{Error, Result};
use crate::graph::{all_pairs, edge_at, edge_index, pair_count, Edge, Graph};

/// A subset of the colors `1..=r`, bit `c - 1` standing for color `c`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Palette(u16);

impl Palette {
    pub const EMPTY: Palette = Palette(0);

    pub fn from_mask(mask: u16) -> Self {
        Palette(mask)
    }

    /// All of `1..=r`.
    pub fn full(r: usize) -> Self {
        Palette(((1u32 << r) - 1) as u16)
    }

    pub fn singleton(color: u8) -> Self {
        debug_assert!((1..=16).contains(&color));
        Palette(1 << (color - 1))
    }

    pub fn from_colors(colors: &[u8]) -> Self {
        Palette(colors.iter().fold(0, |m, &c| m | 1 << (c - 1)))
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, color: u8) -> bool {
        color >= 1 && self.0 >> (color - 1) & 1 == 1
    }

    pub fn is_subset(self, other: Palette) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(self, other: Palette) -> Palette {
        Palette(self.0 & other.0)
    }

    /// Colors in increasing order.
    pub fn colors(self) -> impl Iterator<Item = u8> {
        (1..=16u8).filter(move |&c| self.contains(c))
    }
}

impl fmt::Debug for Palette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.colors()).finish()
    }
}

/// Number of triples `(a, b, c)` with `a in x`, `b in y`, `c in z`, pairwise
/// distinct.
#[inline]
pub fn rainbow_choices(x: Palette, y: Palette, z: Palette) -> u64 {
    let (a, b, c) = (x.len() as u64, y.len() as u64, z.len() as u64);
    let ab = x.intersect(y).len() as u64;
    let ac = x.intersect(z).len() as u64;
    let bc = y.intersect(z).len() as u64;
    let abc = x.intersect(y).intersect(z).len() as u64;
    a * b * c + 2 * abc - ab * c - ac * b - bc * a
}

/// A palette for every pair of `[n]`, indexed lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Template {
    n: usize,
    r: usize,
    palettes: Vec<Palette>,
}

/// Entropy-style bounds on `log2 |Ga(P, G)|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogBound {
    /// `sum_e log2 w(e)`.
    pub edge_sum: f64,
    /// `(1 / (n - 2)) sum_T sum_{e in T} log2 w(e)`; absent for `n < 3`.
    pub triangle_sum: Option<f64>,
}

/// Edges whose palette has at least three colors, and the typical ones among
/// them (at most `n^(11/12)` rainbow triangles through the edge).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct REdges {
    pub all: Vec<Edge>,
    pub typical: Vec<Edge>,
}

impl Template {
    pub fn new(n: usize, r: usize, palettes: Vec<Palette>) -> Result<Self> {
        check_colors(r)?;
        if n == 0 {
            return Err(Error::InvalidParameter("template order must be at least 1".into()));
        }
        if palettes.len() != pair_count(n) {
            return Err(Error::InvalidInput(format!(
                "order {n} needs {} palettes, got {}",
                pair_count(n),
                palettes.len()
            )));
        }
        let allowed = Palette::full(r);
        if let Some(i) = palettes.iter().position(|p| !p.is_subset(allowed)) {
            return Err(Error::InvalidInput(format!(
                "palette on {} uses a color above {r}",
                edge_at(n, i)
            )));
        }
        Ok(Template { n, r, palettes })
    }

    /// Every pair gets `palette`.
    pub fn uniform(n: usize, r: usize, palette: Palette) -> Result<Self> {
        Template::new(n, r, vec![palette; pair_count(n)])
    }

    /// Every pair gets all `r` colors.
    pub fn full(n: usize, r: usize) -> Result<Self> {
        Template::uniform(n, r, Palette::full(r))
    }

    /// Singleton palettes on the colored edges, empty palettes elsewhere.
    pub fn from_coloring(c: &Coloring, n: usize) -> Result<Self> {
        let mut palettes = vec![Palette::EMPTY; pair_count(n)];
        for (e, col) in c.iter() {
            if e.v >= n {
                return Err(Error::InvalidInput(format!("edge {e} lies outside order {n}")));
            }
            palettes[e.index(n)] = Palette::singleton(col);
        }
        Template::new(n, c.r(), palettes)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> usize {
        self.r
    }

    pub fn palettes(&self) -> &[Palette] {
        &self.palettes
    }

    pub fn palette(&self, e: Edge) -> Palette {
        self.palettes[e.index(self.n)]
    }

    #[inline]
    fn at(&self, a: usize, b: usize) -> Palette {
        self.palettes[edge_index(self.n, a, b)]
    }

    /// Copy with the palette on `e` replaced.
    pub fn with_palette(&self, e: Edge, p: Palette) -> Result<Self> {
        if e.v >= self.n {
            return Err(Error::InvalidInput(format!("edge {e} lies outside order {}", self.n)));
        }
        if !p.is_subset(Palette::full(self.r)) {
            return Err(Error::InvalidInput(format!(
                "palette {p:?} uses a color above {}",
                self.r
            )));
        }
        let mut t = self.clone();
        t.palettes[e.index(self.n)] = p;
        Ok(t)
    }

    fn check_compatible(&self, other: &Template) -> Result<()> {
        if self.n != other.n || self.r != other.r {
            return Err(Error::InvalidInput(format!(
                "templates differ in shape: (n={}, r={}) vs (n={}, r={})",
                self.n, self.r, other.n, other.r
            )));
        }
        Ok(())
    }

    /// `self(e) ⊆ other(e)` for every pair.
    pub fn is_subtemplate(&self, other: &Template) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.palettes.iter().zip(&other.palettes).all(|(a, b)| a.is_subset(*b)))
    }

    /// Whether a coloring (of a graph on at most `n` vertices) picks every
    /// color from this template.
    pub fn admits(&self, c: &Coloring) -> bool {
        c.iter().all(|(e, col)| e.v < self.n && self.palette(e).contains(col))
    }

    /// Number of rainbow triangles with one color chosen from each palette.
    pub fn rt_count(&self) -> BigUint {
        let n = self.n;
        let mut total: u128 = 0;
        for a in 0..n {
            for b in a + 1..n {
                let ab = self.at(a, b);
                for c in b + 1..n {
                    total += rainbow_choices(ab, self.at(a, c), self.at(b, c)) as u128;
                }
            }
        }
        BigUint::from(total)
    }

    /// Rainbow triangles (counted with their color choices) through `e`.
    pub fn rainbow_through(&self, e: Edge) -> u64 {
        let p = self.palette(e);
        (0..self.n)
            .filter(|&w| !e.touches(w))
            .map(|w| rainbow_choices(p, self.at(e.u, w), self.at(e.v, w)))
            .sum()
    }

    /// `RT(P) <= n^(-1/3) C(n,3)`, tested as `RT^3 n <= C(n,3)^3`.
    pub fn rt_within_threshold(&self) -> bool {
        rt_threshold_holds(&self.rt_count(), self.n)
    }

    /// Nonempty palettes on `E(G)` and few rainbow triangles.
    pub fn is_gallai_template(&self, g: &Graph) -> Result<bool> {
        self.check_graph(g)?;
        let covered = g.edges().iter().all(|&e| !self.palette(e).is_empty());
        Ok(covered && self.rt_within_threshold())
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if g.order() > self.n {
            return Err(Error::InvalidInput(format!(
                "graph of order {} exceeds template order {}",
                g.order(),
                self.n
            )));
        }
        Ok(())
    }

    /// Number of Gallai colorings of `g` choosing each edge's color from its
    /// palette.
    pub fn count_ga(&self, g: &Graph, cfg: &CountConfig) -> Result<BigUint> {
        self.check_graph(g)?;
        let masks: Vec<u16> = g.edges().iter().map(|&e| self.palette(e).mask()).collect();
        count_with_palettes(g, self.r, &masks, cfg)
    }

    /// `w(e) = |P(e)|`, or 1 for an empty palette.
    pub fn weight(&self, e: Edge) -> u32 {
        self.palette(e).len().max(1) as u32
    }

    /// Both sides of the double-counting step of the entropy bound. Sums are
    /// grouped by weight value so that each side is an integer combination of
    /// `log2 w`.
    pub fn product_log_bound(&self) -> LogBound {
        let n = self.n;
        let mut per_edge = [0u64; 17];
        for p in &self.palettes {
            per_edge[p.len().max(1)] += 1;
        }
        let edge_sum = weighted_log_sum(&per_edge, 1);
        let triangle_sum = (n >= 3).then(|| {
            let mut per_slot = [0u64; 17];
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for p in [self.at(a, b), self.at(a, c), self.at(b, c)] {
                            per_slot[p.len().max(1)] += 1;
                        }
                    }
                }
            }
            weighted_log_sum(&per_slot, (n - 2) as u64)
        });
        LogBound { edge_sum, triangle_sum }
    }

    pub fn r_edges(&self) -> REdges {
        let n_pow = BigUint::from(self.n).pow(11u32);
        let mut all = Vec::new();
        let mut typical = Vec::new();
        for e in all_pairs(self.n) {
            if self.palette(e).len() >= 3 {
                all.push(e);
                if BigUint::from(self.rainbow_through(e)).pow(12u32) <= n_pow {
                    typical.push(e);
                }
            }
        }
        REdges { all, typical }
    }

    /// Number of pairs with at least three colors and whether it respects
    /// `count <= n^(-1/6) n^2`, tested as `count^6 <= n^11`.
    pub fn heavy_edge_audit(&self) -> (usize, bool) {
        let count = self.palettes.iter().filter(|p| p.len() >= 3).count();
        let ok = BigUint::from(count).pow(6u32) <= BigUint::from(self.n).pow(11u32);
        (count, ok)
    }

    /// The pair `{i, j}` carried as the exact palette by the most pairs, with
    /// that count; ties go to the lexicographically first pair.
    pub fn two_palette_majority(&self) -> ((u8, u8), usize) {
        let mut best = ((1, 2), 0);
        for i in 1..=self.r as u8 {
            for j in i + 1..=self.r as u8 {
                let target = Palette::from_colors(&[i, j]);
                let count = self.palettes.iter().filter(|&&p| p == target).count();
                if count > best.1 {
                    best = ((i, j), count);
                }
            }
        }
        best
    }
}

impl fmt::Debug for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Template(n={}, r={}, ", self.n, self.r)?;
        f.debug_map()
            .entries(all_pairs(self.n).zip(&self.palettes).map(|(e, p)| (e.to_string(), p)))
            .finish()?;
        write!(f, ")")
    }
}

fn weighted_log_sum(counts: &[u64; 17], divisor: u64) -> f64 {
    counts
        .iter()
        .enumerate()
        .skip(2)
        .map(|(w, &k)| (k as f64 / divisor as f64) * (w as f64).log2())
        .sum()
}

/// `rt <= n^(-1/3) C(n,3)`, i.e. `rt^3 n <= C(n,3)^3`.
pub fn rt_threshold_holds(rt: &BigUint, n: usize) -> bool {
    let c3 = BigUint::from(n * n.saturating_sub(1) * n.saturating_sub(2) / 6);
    rt.pow(3u32) * n <= c3.pow(3u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pal(colors: &[u8]) -> Palette {
        Palette::from_colors(colors)
    }

    /// Direct enumeration of the color triples.
    fn brute_rainbow(x: Palette, y: Palette, z: Palette) -> u64 {
        let mut count = 0;
        for a in x.colors() {
            for b in y.colors() {
                for c in z.colors() {
                    if a != b && b != c && a != c {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn rainbow_choices_matches_enumeration() {
        for x in 0u16..16 {
            for y in 0u16..16 {
                for z in 0u16..16 {
                    let (x, y, z) = (Palette(x), Palette(y), Palette(z));
                    assert_eq!(rainbow_choices(x, y, z), brute_rainbow(x, y, z));
                }
            }
        }
    }

    #[test]
    fn from_coloring_examples() {
        let k3 = Graph::complete(3).unwrap();
        let c = Coloring::new(&k3, 3, vec![1, 1, 2]).unwrap();
        let t = Template::from_coloring(&c, 3).unwrap();
        assert_eq!(t.palettes(), &[pal(&[1]), pal(&[1]), pal(&[2])]);

        let empty = Coloring::new(&Graph::empty(4).unwrap(), 3, vec![]).unwrap();
        let t = Template::from_coloring(&empty, 4).unwrap();
        assert!(t.palettes().iter().all(|p| p.is_empty()));

        let c4 = Graph::cycle(4).unwrap();
        let t = Template::from_coloring(&Coloring::new(&c4, 3, vec![1, 2, 3, 1]).unwrap(), 4).unwrap();
        assert_eq!(t.palettes().iter().filter(|p| p.len() == 1).count(), 4);
        assert_eq!(t.palettes().iter().filter(|p| p.is_empty()).count(), 2);
    }

    #[test]
    fn subtemplate_examples() {
        let full = Template::full(4, 3).unwrap();
        assert!(full.is_subtemplate(&full).unwrap());
        let k4 = Graph::complete(4).unwrap();
        let c = Template::from_coloring(&Coloring::new(&k4, 3, vec![1, 2, 3, 1, 2, 3]).unwrap(), 4).unwrap();
        assert!(c.is_subtemplate(&full).unwrap());
        let p12 = Template::uniform(4, 3, pal(&[1, 2])).unwrap();
        let p13 = Template::uniform(4, 3, pal(&[1, 3])).unwrap();
        assert!(!p12.is_subtemplate(&p13).unwrap());
        assert!(p12.is_subtemplate(&Template::full(5, 3).unwrap()).is_err());
        assert!(p12.is_subtemplate(&Template::full(4, 4).unwrap()).is_err());
    }

    #[test]
    fn rt_examples() {
        assert_eq!(Template::full(3, 3).unwrap().rt_count(), BigUint::from(6u32));
        assert_eq!(
            Template::uniform(6, 4, pal(&[1, 2])).unwrap().rt_count(),
            BigUint::from(0u32)
        );
        let t = Template::new(3, 3, vec![pal(&[1, 2]), pal(&[2, 3]), pal(&[1, 3])]).unwrap();
        assert_eq!(brute_rainbow(pal(&[1, 2]), pal(&[2, 3]), pal(&[1, 3])), 2);
        assert_eq!(t.rt_count(), BigUint::from(2u32));
    }

    #[test]
    fn gallai_template_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(Template::uniform(4, 3, pal(&[1, 2]))
            .unwrap()
            .is_gallai_template(&k4)
            .unwrap());
        let holed = Template::uniform(4, 3, pal(&[1, 2]))
            .unwrap()
            .with_palette(Edge::new(0, 1), Palette::EMPTY)
            .unwrap();
        assert!(!holed.is_gallai_template(&k4).unwrap());
        // Not an edge of the graph, so an empty palette there is allowed.
        let c4 = Graph::cycle(4).unwrap();
        let ok = Template::uniform(4, 3, pal(&[1, 2]))
            .unwrap()
            .with_palette(Edge::new(0, 2), Palette::EMPTY)
            .unwrap();
        assert!(ok.is_gallai_template(&c4).unwrap());
        // RT = 24 and 24^3 * 4 = 55296 > 4^3.
        let full = Template::full(4, 3).unwrap();
        assert_eq!(full.rt_count(), BigUint::from(24u32));
        assert!(!full.is_gallai_template(&k4).unwrap());
        assert!(full.is_gallai_template(&Graph::complete(5).unwrap()).is_err());
    }

    #[test]
    fn count_ga_examples() {
        let cfg = CountConfig::default();
        let g = Graph::complete(5).unwrap();
        let two = Template::uniform(5, 4, pal(&[2, 4])).unwrap();
        assert_eq!(two.count_ga(&g, &cfg).unwrap(), BigUint::from(1u32 << 10));
        let full = Template::full(5, 3).unwrap();
        assert_eq!(
            full.count_ga(&g, &cfg).unwrap(),
            crate::counting::count_gallai(&g, 3).unwrap()
        );
        let k3 = Graph::complete(3).unwrap();
        let rainbow = Template::new(3, 3, vec![pal(&[1]), pal(&[2]), pal(&[3])]).unwrap();
        assert_eq!(rainbow.count_ga(&k3, &cfg).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn weights_and_log_bound() {
        let t = Template::uniform(6, 3, pal(&[1, 2])).unwrap();
        let b = t.product_log_bound();
        assert_eq!(b.edge_sum, 15.0);
        assert_eq!(b.triangle_sum, Some(15.0));
        let f = Template::full(5, 4).unwrap().product_log_bound();
        assert_eq!(f.edge_sum, 20.0);
        let mixed = Template::full(5, 3)
            .unwrap()
            .with_palette(Edge::new(0, 1), Palette::EMPTY)
            .unwrap()
            .with_palette(Edge::new(2, 3), pal(&[1]))
            .unwrap();
        assert_eq!(mixed.weight(Edge::new(0, 1)), 1);
        assert_eq!(mixed.weight(Edge::new(2, 3)), 1);
        assert_eq!(mixed.weight(Edge::new(0, 2)), 3);
        let b = mixed.product_log_bound();
        assert_eq!(b.triangle_sum, Some(b.edge_sum));
        assert_eq!(Template::full(2, 3).unwrap().product_log_bound().triangle_sum, None);
    }

    #[test]
    fn r_edge_examples() {
        let two = Template::uniform(5, 3, pal(&[1, 2])).unwrap().r_edges();
        assert!(two.all.is_empty() && two.typical.is_empty());

        let full = Template::full(3, 3).unwrap();
        assert_eq!(full.rainbow_through(Edge::new(0, 1)), 6);
        let re = full.r_edges();
        assert_eq!(re.all.len(), 3);
        assert!(re.typical.is_empty());

        // One full edge, every other palette {1}: no rainbow triangle uses it.
        let lone = Template::uniform(6, 3, pal(&[1]))
            .unwrap()
            .with_palette(Edge::new(0, 1), Palette::full(3))
            .unwrap();
        assert_eq!(lone.rainbow_through(Edge::new(0, 1)), 0);
        let re = lone.r_edges();
        assert_eq!(re.all, vec![Edge::new(0, 1)]);
        assert_eq!(re.typical, vec![Edge::new(0, 1)]);
    }

    #[test]
    fn two_palette_majority_examples() {
        let t = Template::uniform(5, 4, pal(&[1, 3])).unwrap();
        assert_eq!(t.two_palette_majority(), ((1, 3), 10));
        let full = Template::full(5, 4).unwrap();
        assert_eq!(full.two_palette_majority(), ((1, 2), 0));
        // Six pairs {1,2}, four pairs {3,4}.
        let mut split = Template::uniform(5, 4, pal(&[3, 4])).unwrap();
        for i in 0..6 {
            split = split.with_palette(edge_at(5, i), pal(&[1, 2])).unwrap();
        }
        assert_eq!(split.two_palette_majority(), ((1, 2), 6));
    }

    #[test]
    fn rejects_bad_palettes() {
        assert!(Template::new(3, 3, vec![pal(&[4]), pal(&[1]), pal(&[1])]).is_err());
        assert!(Template::new(3, 3, vec![pal(&[1]); 2]).is_err());
        assert!(Template::full(3, 17).is_err());
    }
}
