//! The rainbow-triangle hypergraph on `E(K_n) x [r]`, its degree statistics,
//! the container parameter audit and a verifier for claimed container
//! families.

mod cover;
mod params;

pub use cover::{verify_cover, CoverCertificate, CoverConfig, CoverageReport, RtCheck, SizeCheck};
pub use params::{audit_params, codegree_function, AuditReport, ContainerParams, DEFAULT_CONTAINER_C};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{edge_index, pair_count};
use crate::templates::Template;

/// Largest order and color count for which hyperedges are materialized.
pub const MAX_EXPLICIT_ORDER: usize = 10;
pub const MAX_EXPLICIT_COLORS: usize = 6;

pub(crate) fn check_shape(n: usize, r: usize) -> Result<()> {
    if n < 3 || r < 3 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 3 and r >= 3, got n={n}, r={r}"
        )));
    }
    crate::counting::check_colors(r)
}

/// 3-uniform hypergraph whose vertices are (pair, color) and whose edges are
/// the rainbow triangles of `K_n`. Vertex `(e, c)` has index `e * r + c - 1`.
#[derive(Clone, Debug)]
pub struct RainbowHypergraph {
    n: usize,
    r: usize,
    edges: Vec<[u32; 3]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub v: u64,
    pub e: u64,
    /// Average degree `3e / v`.
    pub d: Ratio<u64>,
    pub delta2: u64,
    pub delta3: u64,
}

impl DegreeStats {
    /// `v = r C(n,2)`, `e = r(r-1)(r-2) C(n,3)`, `d = (r-1)(r-2)(n-2)`,
    /// `delta2 = r - 2`, `delta3 = 1`.
    pub fn closed_form(n: usize, r: usize) -> Result<DegreeStats> {
        check_shape(n, r)?;
        let (n, r) = (n as u64, r as u64);
        Ok(DegreeStats {
            v: r * n * (n - 1) / 2,
            e: r * (r - 1) * (r - 2) * (n * (n - 1) * (n - 2) / 6),
            d: Ratio::from_integer((r - 1) * (r - 2) * (n - 2)),
            delta2: r - 2,
            delta3: 1,
        })
    }
}

impl RainbowHypergraph {
    pub fn build(n: usize, r: usize) -> Result<Self> {
        check_shape(n, r)?;
        if n > MAX_EXPLICIT_ORDER || r > MAX_EXPLICIT_COLORS {
            return Err(Error::ResourceLimit(format!(
                "explicit hypergraph limited to n <= {MAX_EXPLICIT_ORDER}, r <= {MAX_EXPLICIT_COLORS}; \
                 use closed-form or sampled statistics for n={n}, r={r}"
            )));
        }
        let rainbow: Vec<[u32; 3]> = {
            let mut out = Vec::new();
            for x in 0..r as u32 {
                for y in 0..r as u32 {
                    for z in 0..r as u32 {
                        if x != y && y != z && x != z {
                            out.push([x, y, z]);
                        }
                    }
                }
            }
            out
        };
        let edges = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| {
                let mut out = Vec::new();
                for b in a + 1..n {
                    for c in b + 1..n {
                        let pairs = [edge_index(n, a, b), edge_index(n, a, c), edge_index(n, b, c)];
                        for cols in &rainbow {
                            out.push([0, 1, 2].map(|i| (pairs[i] * r) as u32 + cols[i]));
                        }
                    }
                }
                out
            })
            .collect();
        Ok(RainbowHypergraph { n, r, edges })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> usize {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.r * pair_count(self.n)
    }

    /// Each hyperedge as three vertex indices in increasing order.
    pub fn edges(&self) -> &[[u32; 3]] {
        &self.edges
    }

    /// `(pair index, color)` of a vertex.
    pub fn vertex(&self, v: u32) -> (usize, u8) {
        (v as usize / self.r, (v as usize % self.r) as u8 + 1)
    }

    /// Measured statistics.
    pub fn degree_stats(&self) -> DegreeStats {
        let v = self.vertex_count();
        let mut pair = vec![0u32; v * v];
        for h in &self.edges {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                pair[h[i] as usize * v + h[j] as usize] += 1;
            }
        }
        let mut sorted = self.edges.clone();
        sorted.par_sort_unstable();
        let repeated = sorted.windows(2).any(|w| w[0] == w[1]);
        let e = self.edges.len() as u64;
        DegreeStats {
            v: v as u64,
            e,
            d: Ratio::new(3 * e, v as u64),
            delta2: pair.iter().copied().max().unwrap_or(0) as u64,
            delta3: if e == 0 {
                0
            } else if repeated {
                2
            } else {
                1
            },
        }
    }

    /// Vertices `(e, c)` with `c` in `P(e)`.
    pub fn template_vertices(&self, p: &Template) -> Result<Vec<bool>> {
        if p.order() != self.n || p.colors() != self.r {
            return Err(Error::InvalidInput("template shape differs from the hypergraph".into()));
        }
        let mut member = vec![false; self.vertex_count()];
        for (i, pal) in p.palettes().iter().enumerate() {
            for c in pal.colors() {
                member[i * self.r + c as usize - 1] = true;
            }
        }
        Ok(member)
    }

    /// No hyperedge lies entirely inside `member`.
    pub fn is_independent(&self, member: &[bool]) -> bool {
        !self.edges.iter().any(|h| h.iter().all(|&x| member[x as usize]))
    }
}

/// Statistics for shapes too large to materialize: degrees and co-degrees of
/// randomly chosen vertices and vertex pairs, counted directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpotCheck {
    pub samples: u64,
    /// Every sampled vertex has degree `(r-1)(r-2)(n-2)`.
    pub degrees_match: bool,
    /// Largest co-degree among sampled pairs sharing a triangle.
    pub max_codegree_seen: u64,
}

pub fn spot_check(n: usize, r: usize, samples: u64, seed: u64) -> Result<SpotCheck> {
    check_shape(n, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let expected = ((r - 1) * (r - 2) * (n - 2)) as u64;
    let rainbow = |x: usize, y: usize, z: usize| x != y && y != z && x != z;
    let mut degrees_match = true;
    let mut max_codegree_seen = 0;
    for _ in 0..samples {
        let (a, b) = distinct_pair(&mut rng, n);
        let c1 = rng.random_range(1..=r);
        let mut degree = 0u64;
        for _apex in (0..n).filter(|&w| w != a && w != b) {
            for c2 in 1..=r {
                degree += (1..=r).filter(|&c3| rainbow(c1, c2, c3)).count() as u64;
            }
        }
        degrees_match &= degree == expected;

        // A second pair sharing endpoint `a`; the triangle's third pair is fixed.
        let c2 = rng.random_range(1..=r);
        let codegree = (1..=r).filter(|&c3| rainbow(c1, c2, c3)).count() as u64;
        max_codegree_seen = max_codegree_seen.max(codegree);
    }
    Ok(SpotCheck {
        samples,
        degrees_match,
        max_codegree_seen,
    })
}

fn distinct_pair(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let a = rng.random_range(0..n);
    let mut b = rng.random_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a.min(b), a.max(b))
}
