//! Gallai counts over all isomorphism classes of a given order.

mod cache;

pub use cache::CountCache;

use std::io::Write;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::counting::{check_colors, count_gallai_with, CountConfig};
use crate::error::{Error, Result};
use crate::graph::{all_graphs, canonical_form, CanonicalForm, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalRow {
    pub form: CanonicalForm,
    pub edges: usize,
    /// Absent when the counter ran out of budget on this class.
    pub count: Option<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalTable {
    pub n: usize,
    pub r: usize,
    /// One row per isomorphism class, sorted by canonical form.
    pub rows: Vec<ExtremalRow>,
    /// Every class attaining the largest count.
    pub argmax: Vec<CanonicalForm>,
    /// False when some row has no count; `argmax` then only ranges over the
    /// counted rows.
    pub authoritative: bool,
    /// Budget messages of the rows that could not be counted.
    pub failures: Vec<(CanonicalForm, String)>,
}

impl ExtremalTable {
    pub fn max_count(&self) -> Option<&BigUint> {
        self.rows.iter().filter_map(|r| r.count.as_ref()).max()
    }

    pub fn row(&self, form: &CanonicalForm) -> Option<&ExtremalRow> {
        self.rows
            .binary_search_by(|r| r.form.cmp(form))
            .ok()
            .map(|i| &self.rows[i])
    }

    /// `g6,edges,count` with a header line; missing counts are left empty.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(["g6", "edges", "count"]).map_err(csv_err)?;
        for row in &self.rows {
            let count = row.count.as_ref().map(|c| c.to_string()).unwrap_or_default();
            w.write_record([row.form.as_str(), &row.edges.to_string(), &count])
                .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Largest order searched for `r <= 4`, and for `r >= 5`.
pub const MAX_EXTREMAL_ORDER: usize = 6;
pub const MAX_EXTREMAL_ORDER_MANY_COLORS: usize = 5;

fn check_search(n: usize, r: usize) -> Result<()> {
    check_colors(r)?;
    let cap = if r >= 5 {
        MAX_EXTREMAL_ORDER_MANY_COLORS
    } else {
        MAX_EXTREMAL_ORDER
    };
    if n == 0 || n > cap {
        return Err(Error::InvalidParameter(format!(
            "extremal search with r = {r} supports 1 <= n <= {cap}, got {n}"
        )));
    }
    Ok(())
}

/// Counts every class of order `n`, reusing and extending `cache`.
pub fn extremal_search(
    n: usize,
    r: usize,
    cfg: &CountConfig,
    mut cache: Option<&mut CountCache>,
) -> Result<ExtremalTable> {
    check_search(n, r)?;
    let graphs = all_graphs(n)?;
    let snapshot = cache.as_deref();
    let computed: Vec<(CanonicalForm, usize, bool, std::result::Result<BigUint, String>)> = graphs
        .par_iter()
        .map(|g| {
            let form = canonical_form(g).expect("enumerated orders are canonicalizable");
            if let Some(hit) = snapshot.and_then(|c| c.get(&form, r)) {
                return (form, g.edge_count(), true, Ok(hit.clone()));
            }
            let count = match count_gallai_with(g, r, cfg) {
                Ok(c) => Ok(c),
                Err(Error::ResourceLimit(msg)) => Err(msg),
                Err(e) => panic!("counting an enumerated graph failed: {e}"),
            };
            (form, g.edge_count(), false, count)
        })
        .collect();

    let mut rows = Vec::with_capacity(computed.len());
    let mut failures = Vec::new();
    for (form, edges, cached, count) in computed {
        match count {
            Ok(c) => {
                if !cached {
                    if let Some(cache) = cache.as_deref_mut() {
                        cache.put(&form, r, &c)?;
                    }
                }
                rows.push(ExtremalRow {
                    form,
                    edges,
                    count: Some(c),
                });
            }
            Err(msg) => {
                failures.push((form.clone(), msg));
                rows.push(ExtremalRow {
                    form,
                    edges,
                    count: None,
                });
            }
        }
    }
    rows.sort_by(|a, b| a.form.cmp(&b.form));
    failures.sort();
    let best = rows.iter().filter_map(|r| r.count.as_ref()).max().cloned();
    let argmax = rows
        .iter()
        .filter(|row| row.count.is_some() && row.count == best)
        .map(|row| row.form.clone())
        .collect();
    Ok(ExtremalTable {
        n,
        r,
        rows,
        argmax,
        authoritative: failures.is_empty(),
        failures,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Winner {
    Complete,
    Bipartite,
    Tie,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownComparison {
    pub count_kn: BigUint,
    /// Count for `K_{floor(n/2), ceil(n/2)}`.
    pub count_bipartite: BigUint,
    pub winner: Winner,
}

pub fn compare_known(n: usize, r: usize, cfg: &CountConfig) -> Result<KnownComparison> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    let count_kn = count_gallai_with(&Graph::complete(n)?, r, cfg)?;
    let count_bipartite = count_gallai_with(&Graph::complete_bipartite(n / 2, n - n / 2)?, r, cfg)?;
    let winner = match count_kn.cmp(&count_bipartite) {
        std::cmp::Ordering::Greater => Winner::Complete,
        std::cmp::Ordering::Less => Winner::Bipartite,
        std::cmp::Ordering::Equal => Winner::Tie,
    };
    Ok(KnownComparison {
        count_kn,
        count_bipartite,
        winner,
    })
}
