//! One representative per isomorphism class, by vertex augmentation.
//!
//! Every graph on `n` vertices is a class representative on `n - 1` vertices
//! plus one new vertex with some neighbourhood, so extending each
//! representative by all `2^(n-1)` neighbourhoods and deduplicating canonical
//! forms reaches every class.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// All graphs of order `n` up to isomorphism, each given as its canonical
/// representative, sorted by canonical form.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_forms(n)?.into_iter().map(|f| f.graph()).collect())
}

pub(crate) fn all_forms(n: usize) -> Result<Vec<CanonicalForm>> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph order must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::ResourceLimit(format!(
            "isomorphism-class enumeration is limited to n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&Graph::empty(1)?)?];
    for m in 2..=n {
        let next: BTreeSet<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|form| {
                let base = form.graph();
                (0u64..1 << (m - 1)).map(move |nbrs| {
                    let mut adj = base.adjacency().to_vec();
                    for (v, row) in adj.iter_mut().enumerate() {
                        if nbrs >> v & 1 == 1 {
                            *row |= 1 << (m - 1);
                        }
                    }
                    adj.push(nbrs);
                    let g = Graph::from_adjacency(adj).expect("augmentation keeps adjacency valid");
                    canonical_form(&g).expect("order within canonical limit")
                })
            })
            .collect();
        level = next.into_iter().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs, pair_count};
    use std::collections::HashSet;

    /// Deduplicate all labeled graphs by the minimum adjacency bit string over
    /// every permutation, computed without the pruned search.
    fn labeled_dedupe(n: usize) -> usize {
        let pairs: Vec<_> = all_pairs(n).collect();
        let perms = permutations(n);
        let mut seen = HashSet::new();
        for mask in 0u64..1 << pair_count(n) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| (e.u, e.v))
                .collect();
            let key = perms
                .iter()
                .map(|p| {
                    let mut bits = vec![false; pairs.len()];
                    for &(a, b) in &edges {
                        bits[crate::graph::edge_index(n, p[a], p[b])] = true;
                    }
                    bits
                })
                .min()
                .unwrap();
            seen.insert(key);
        }
        seen.len()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn class_counts_match_labeled_dedupe() {
        for n in 1..=5 {
            let expected = labeled_dedupe(n);
            assert_eq!(all_graphs(n).unwrap().len(), expected, "n = {n}");
        }
        assert_eq!(
            (1..=5).map(|n| all_graphs(n).unwrap().len()).collect::<Vec<_>>(),
            vec![1, 2, 4, 11, 34]
        );
    }

    #[test]
    fn orders_six_and_seven() {
        assert_eq!(all_graphs(6).unwrap().len(), 156);
        assert_eq!(all_graphs(7).unwrap().len(), 1044);
    }

    #[test]
    fn representatives_are_canonical_and_sorted() {
        let forms = all_forms(5).unwrap();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        for f in &forms {
            assert_eq!(&canonical_form(&f.graph()).unwrap(), f);
        }
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(all_graphs(8), Err(Error::ResourceLimit(_))));
    }
}
