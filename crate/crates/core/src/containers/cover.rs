//! Checking a claimed container family against the three container
//! properties on a fixed order.

use num_bigint::BigUint;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::DEFAULT_CONTAINER_C;
use crate::counting::{check_colors, Coloring};
use crate::error::{Error, Result};
use crate::graph::{edge_index, pair_count, Graph};
use crate::templates::Template;

#[derive(Clone, Debug, PartialEq)]
pub struct CoverConfig {
    /// Orders up to this are checked over every Gallai coloring of `K_n`.
    pub exhaustive_max_order: usize,
    pub samples: u64,
    pub seed: u64,
    /// Uniform draws tried per rejection sample before falling back to a
    /// sequentially built Gallai coloring.
    pub rejection_attempts: u32,
    pub c: f64,
}

impl Default for CoverConfig {
    fn default() -> Self {
        CoverConfig {
            exhaustive_max_order: 4,
            samples: 10_000,
            seed: 0x006a_11a1,
            rejection_attempts: 1000,
            c: DEFAULT_CONTAINER_C,
        }
    }
}

/// Property (i): every Gallai coloring of `K_n` lies in some member.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverageReport {
    pub exhaustive: bool,
    pub checked: u64,
    /// A Gallai coloring of `K_n` contained in no member.
    pub uncovered: Option<Coloring>,
}

/// Property (ii) for one member: `RT^3 n <= C(n,3)^3`.
#[derive(Clone, Debug, PartialEq)]
pub struct RtCheck {
    pub rt: BigUint,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub pass: bool,
}

/// Property (iii): `log2 |family| <= c n^(-1/3) log2(n)^2 C(n,2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SizeCheck {
    pub log2_family: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverCertificate {
    pub n: usize,
    pub r: usize,
    pub family: Vec<Template>,
    pub coverage: CoverageReport,
    pub rt: Vec<RtCheck>,
    pub size: SizeCheck,
}

impl CoverCertificate {
    pub fn coverage_ok(&self) -> bool {
        self.coverage.uncovered.is_none()
    }

    pub fn rt_ok(&self) -> bool {
        self.rt.iter().all(|c| c.pass)
    }

    /// Index and check of the first member failing property (ii).
    pub fn rt_witness(&self) -> Option<(usize, &RtCheck)> {
        self.rt.iter().enumerate().find(|(_, c)| !c.pass)
    }

    pub fn all_ok(&self) -> bool {
        self.coverage_ok() && self.rt_ok() && self.size.pass
    }
}

pub fn verify_cover(family: &[Template], n: usize, r: usize, cfg: &CoverConfig) -> Result<CoverCertificate> {
    check_colors(r)?;
    if n < 3 {
        return Err(Error::InvalidParameter(format!("order must be at least 3, got {n}")));
    }
    if let Some(t) = family.iter().find(|t| t.order() != n || t.colors() != r) {
        return Err(Error::InvalidInput(format!(
            "family member has n={}, r={}; expected n={n}, r={r}",
            t.order(),
            t.colors()
        )));
    }
    let kn = Graph::complete(n)?;
    let covered = |colors: &[u8]| {
        family
            .iter()
            .any(|t| t.palettes().iter().zip(colors).all(|(p, &c)| p.contains(c)))
    };

    let exhaustive = n <= cfg.exhaustive_max_order;
    let colorings = if exhaustive {
        all_gallai_colorings(n, r)
    } else {
        sample_gallai_colorings(n, r, cfg)
    };
    let uncovered = colorings
        .par_iter()
        .find_first(|c| !covered(c))
        .map(|c| Coloring::new(&kn, r, c.clone()).expect("valid colors"));
    let coverage = CoverageReport {
        exhaustive,
        checked: colorings.len() as u64,
        uncovered,
    };

    let c3 = BigUint::from(n * (n - 1) * (n - 2) / 6);
    let rhs = c3.pow(3);
    let rt = family
        .par_iter()
        .map(|t| {
            let rt = t.rt_count();
            let lhs = rt.pow(3) * n;
            RtCheck {
                pass: lhs <= rhs,
                rt,
                lhs,
                rhs: rhs.clone(),
            }
        })
        .collect();

    let log2_family = if family.is_empty() {
        f64::NEG_INFINITY
    } else {
        (family.len() as f64).log2()
    };
    let log_n = (n as f64).log2();
    let bound = cfg.c * (n as f64).cbrt().recip() * log_n * log_n * pair_count(n) as f64;
    let size = SizeCheck {
        log2_family,
        bound,
        pass: log2_family <= bound,
    };

    Ok(CoverCertificate {
        n,
        r,
        family: family.to_vec(),
        coverage,
        rt,
        size,
    })
}

/// For each pair position of `K_n`, the earlier pairs closing a triangle
/// with it.
fn closing_pairs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut closes = vec![Vec::new(); pair_count(n)];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                // bc has the largest index of the three.
                closes[edge_index(n, b, c)].push((edge_index(n, a, b), edge_index(n, a, c)));
            }
        }
    }
    closes
}

/// Every Gallai coloring of `K_n`, colors listed by pair index.
fn all_gallai_colorings(n: usize, r: usize) -> Vec<Vec<u8>> {
    fn descend(pos: usize, r: u8, closes: &[Vec<(usize, usize)>], cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos == closes.len() {
            out.push(cur.clone());
            return;
        }
        for c in 1..=r {
            if closes[pos]
                .iter()
                .all(|&(x, y)| cur[x] == cur[y] || cur[x] == c || cur[y] == c)
            {
                cur.push(c);
                descend(pos + 1, r, closes, cur, out);
                cur.pop();
            }
        }
    }
    let closes = closing_pairs(n);
    let mut out = Vec::new();
    descend(0, r as u8, &closes, &mut Vec::new(), &mut out);
    out
}

fn is_gallai_kn(colors: &[u8], closes: &[Vec<(usize, usize)>]) -> bool {
    closes.iter().enumerate().all(|(pos, list)| {
        let c = colors[pos];
        list.iter()
            .all(|&(x, y)| colors[x] == colors[y] || colors[x] == c || colors[y] == c)
    })
}

/// Alternates two-color colorings with uniform Gallai colorings found by
/// rejection.
fn sample_gallai_colorings(n: usize, r: usize, cfg: &CoverConfig) -> Vec<Vec<u8>> {
    let closes = closing_pairs(n);
    let m = pair_count(n);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let colors: Vec<u8> = (1..=r as u8).collect();
    let mut out = Vec::with_capacity(cfg.samples as usize);
    for i in 0..cfg.samples {
        if i % 2 == 0 {
            let pair: Vec<u8> = colors.choose_multiple(&mut rng, 2).copied().collect();
            out.push((0..m).map(|_| pair[rng.random_range(0..2)]).collect());
            continue;
        }
        let mut found = None;
        for _ in 0..cfg.rejection_attempts {
            let c: Vec<u8> = (0..m).map(|_| rng.random_range(1..=r as u8)).collect();
            if is_gallai_kn(&c, &closes) {
                found = Some(c);
                break;
            }
        }
        let c = match found {
            Some(c) => c,
            None => loop {
                if let Some(c) = sequential_gallai(&closes, r, &mut rng) {
                    break c;
                }
            },
        };
        out.push(c);
    }
    out
}

/// Colors pairs in index order, each uniformly among the colors that keep
/// every closed triangle non-rainbow; gives up if no color qualifies.
fn sequential_gallai(closes: &[Vec<(usize, usize)>], r: usize, rng: &mut impl Rng) -> Option<Vec<u8>> {
    let mut cur: Vec<u8> = Vec::with_capacity(closes.len());
    for list in closes {
        let ok: Vec<u8> = (1..=r as u8)
            .filter(|&c| {
                list.iter()
                    .all(|&(x, y)| cur[x] == cur[y] || cur[x] == c || cur[y] == c)
            })
            .collect();
        cur.push(*ok.choose(rng)?);
    }
    Some(cur)
}
