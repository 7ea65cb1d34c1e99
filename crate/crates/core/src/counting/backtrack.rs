//! Pruned backtracking counter.
//!
//! Edges that share a triangle are grouped into components; components are
//! counted independently and multiplied, and edges on no triangle contribute
//! their palette size directly. Within a component, edges are placed in an
//! order that closes triangles as early as possible. When an edge closes a
//! triangle whose other two edges carry distinct colors `a != b`, its
//! candidates narrow to `{a, b}`; a rainbow triangle is never completed, so
//! every leaf is a Gallai coloring.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use super::{check_colors, CountConfig};
use crate::error::{Error, Result};
use crate::graph::{triangles, Edge, Graph};

/// Exact number of Gallai `r`-colorings of `g` with default budgets.
pub fn count_gallai(g: &Graph, r: usize) -> Result<BigUint> {
    count_gallai_with(g, r, &CountConfig::default())
}

pub fn count_gallai_with(g: &Graph, r: usize, cfg: &CountConfig) -> Result<BigUint> {
    check_colors(r)?;
    let full = ((1u32 << r) - 1) as u16;
    count_with_palettes(g, r, &vec![full; g.edge_count()], cfg)
}

/// Number of Gallai colorings of `g` with edge `g.edges()[i]` restricted to
/// the colors in `palettes[i]` (bit `c - 1` allows color `c`).
pub fn count_with_palettes(g: &Graph, r: usize, palettes: &[u16], cfg: &CountConfig) -> Result<BigUint> {
    check_colors(r)?;
    let edges = g.edges();
    if palettes.len() != edges.len() {
        return Err(Error::InvalidInput(format!(
            "{} palettes given for {} edges",
            palettes.len(),
            edges.len()
        )));
    }
    let allowed = ((1u32 << r) - 1) as u16;
    let palettes: Vec<u16> = palettes.iter().map(|&p| p & allowed).collect();

    let position = |a: usize, b: usize| edges.binary_search(&Edge::new(a, b)).unwrap();
    let tris: Vec<[usize; 3]> = triangles(g)
        .into_iter()
        .map(|[a, b, c]| [position(a, b), position(a, c), position(b, c)])
        .collect();

    let mut total = BigUint::one();
    let mut on_triangle = vec![false; edges.len()];
    for t in &tris {
        for &e in t {
            on_triangle[e] = true;
        }
    }
    for (i, &p) in palettes.iter().enumerate() {
        if !on_triangle[i] {
            total *= p.count_ones();
        }
    }
    if palettes.contains(&0) {
        return Ok(BigUint::default());
    }

    let meter = Meter::new(cfg.node_budget);
    for component in components(edges.len(), &tris) {
        let plan = Plan::build(&component, &tris, &palettes);
        let count = plan.count(cfg.fanout_depth, &meter);
        if meter.aborted.load(Ordering::Relaxed) {
            return Err(Error::ResourceLimit(format!(
                "pruned counter exceeded its budget of {} node visits \
                 (visited {}, partial count {} in the current component)",
                cfg.node_budget,
                meter.visited.load(Ordering::Relaxed),
                count
            )));
        }
        if count == 0 {
            return Ok(BigUint::default());
        }
        total *= BigUint::from(count);
    }
    Ok(total)
}

/// Groups of edge positions connected through shared triangles; edges on no
/// triangle are left out.
fn components(m: usize, tris: &[[usize; 3]]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut used = vec![false; m];
    for t in tris {
        for &e in t {
            used[e] = true;
        }
        let a = find(&mut parent, t[0]);
        for &e in &t[1..] {
            let b = find(&mut parent, e);
            parent[b] = a;
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; m];
    for e in (0..m).filter(|&e| used[e]) {
        let root = find(&mut parent, e);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(e);
    }
    groups
}

/// A fixed edge order for one component, with the triangles each position
/// closes.
struct Plan {
    palettes: Vec<u16>,
    /// For each position, the positions of the other two edges of every
    /// triangle it closes.
    closes: Vec<Vec<(u16, u16)>>,
}

impl Plan {
    fn build(component: &[usize], tris: &[[usize; 3]], palettes: &[u16]) -> Plan {
        let mut member_tris: Vec<Vec<usize>> = vec![Vec::new(); palettes.len()];
        for (t, tri) in tris.iter().enumerate() {
            for &e in tri {
                member_tris[e].push(t);
            }
        }
        let mut placed_at = vec![usize::MAX; palettes.len()];
        let mut order: Vec<usize> = Vec::with_capacity(component.len());
        let mut remaining: Vec<usize> = component.to_vec();
        while !remaining.is_empty() {
            // Score: (triangles closed, triangles touched), ties by lowest index.
            let mut best = 0;
            let mut best_score = (0usize, 0usize);
            for (slot, &e) in remaining.iter().enumerate() {
                let mut closed = 0;
                let mut touched = 0;
                for &t in &member_tris[e] {
                    let others = tris[t]
                        .iter()
                        .filter(|&&x| x != e && placed_at[x] != usize::MAX)
                        .count();
                    if others == 2 {
                        closed += 1;
                    }
                    if others >= 1 {
                        touched += 1;
                    }
                }
                let score = (closed, touched);
                if slot == 0 || score > best_score {
                    best = slot;
                    best_score = score;
                }
            }
            let e = remaining.remove(best);
            placed_at[e] = order.len();
            order.push(e);
        }

        let mut closes = vec![Vec::new(); order.len()];
        for (pos, &e) in order.iter().enumerate() {
            for &t in &member_tris[e] {
                let others: Vec<usize> = tris[t].iter().copied().filter(|&x| x != e).collect();
                let (a, b) = (placed_at[others[0]], placed_at[others[1]]);
                if a < pos && b < pos {
                    closes[pos].push((a as u16, b as u16));
                }
            }
        }
        Plan {
            palettes: order.iter().map(|&e| palettes[e]).collect(),
            closes,
        }
    }

    fn len(&self) -> usize {
        self.palettes.len()
    }

    #[inline]
    fn candidates(&self, pos: usize, colors: &[u8]) -> u16 {
        let mut mask = self.palettes[pos];
        for &(a, b) in &self.closes[pos] {
            let (ca, cb) = (colors[a as usize], colors[b as usize]);
            if ca != cb {
                mask &= (1 << ca) | (1 << cb);
                if mask == 0 {
                    break;
                }
            }
        }
        mask
    }

    fn count(&self, fanout_depth: usize, meter: &Meter) -> u128 {
        let split = fanout_depth.min(self.len().saturating_sub(1));
        let mut prefixes = Vec::new();
        let mut colors = vec![0u8; self.len()];
        self.collect_prefixes(0, split, &mut colors, &mut prefixes);
        prefixes
            .into_par_iter()
            .map(|mut colors| {
                let mut local = Local::default();
                let count = self.descend(split, &mut colors, meter, &mut local);
                meter.flush(&mut local);
                count
            })
            .sum()
    }

    fn collect_prefixes(&self, pos: usize, split: usize, colors: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos == split {
            out.push(colors.clone());
            return;
        }
        let mut cand = self.candidates(pos, colors);
        while cand != 0 {
            colors[pos] = cand.trailing_zeros() as u8;
            cand &= cand - 1;
            self.collect_prefixes(pos + 1, split, colors, out);
        }
    }

    fn descend(&self, pos: usize, colors: &mut [u8], meter: &Meter, local: &mut Local) -> u128 {
        local.nodes += 1;
        if local.nodes >= FLUSH_EVERY && meter.flush(local) {
            return 0;
        }
        let mut cand = self.candidates(pos, colors);
        if pos + 1 == self.len() {
            return cand.count_ones() as u128;
        }
        let mut sum = 0;
        while cand != 0 {
            colors[pos] = cand.trailing_zeros() as u8;
            cand &= cand - 1;
            sum += self.descend(pos + 1, colors, meter, local);
        }
        sum
    }
}

const FLUSH_EVERY: u64 = 1 << 12;

#[derive(Default)]
struct Local {
    nodes: u64,
}

/// Shared node counter; threads report in batches.
struct Meter {
    budget: u64,
    visited: AtomicU64,
    aborted: AtomicBool,
}

impl Meter {
    fn new(budget: u64) -> Self {
        Meter {
            budget,
            visited: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
        }
    }

    /// Adds the local tally; returns true once the budget is spent.
    fn flush(&self, local: &mut Local) -> bool {
        let now = self.visited.fetch_add(local.nodes, Ordering::Relaxed) + local.nodes;
        local.nodes = 0;
        if now > self.budget {
            self.aborted.store(true, Ordering::Relaxed);
        }
        self.aborted.load(Ordering::Relaxed)
    }
}
