mod common;

use std::collections::HashSet;

use common::{graph, graph_and_perm};
use gallai::graph::{
    all_graphs, booksize, canonical_form, graph6_decode, graph6_encode, triangle_count, triangles, Graph,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(6)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_form_is_a_member_of_the_class(g in graph(6)) {
        let form = canonical_form(&g).unwrap();
        let back = form.graph();
        prop_assert_eq!(back.edge_count(), g.edge_count());
        prop_assert_eq!(canonical_form(&back).unwrap(), form);
    }

    #[test]
    fn graph6_round_trip(g in graph(6)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn triangles_from_codegrees(g in graph(7)) {
        let sum: usize = g.edges().iter().map(|e| g.codegree(e.u, e.v)).sum();
        prop_assert_eq!(sum % 3, 0);
        prop_assert_eq!(triangle_count(&g), sum / 3);
        prop_assert_eq!(triangles(&g).len(), sum / 3);
    }

    #[test]
    fn booksize_zero_iff_triangle_free(g in graph(7)) {
        prop_assert_eq!(booksize(&g) == 0, triangles(&g).is_empty());
        prop_assert_eq!(g.is_triangle_free(), triangles(&g).is_empty());
    }
}

/// Smallest edge bit pattern over all relabelings: a canonical key computed
/// without the library.
fn brute_key(n: usize, bits: u32) -> u32 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u32::MAX;
    loop {
        let mut key = 0u32;
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                key |= 1 << index(perm[a], perm[b]);
            }
        }
        best = best.min(key);
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return best;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

#[test]
fn class_counts_match_labeled_dedupe() {
    for (n, expected) in [(1usize, 1usize), (2, 2), (3, 4), (4, 11), (5, 34)] {
        let pairs = n * n.saturating_sub(1) / 2;
        let classes: HashSet<u32> = (0..1u32 << pairs).map(|bits| brute_key(n, bits)).collect();
        assert_eq!(classes.len(), expected, "n = {n}");
        let reps = all_graphs(n).unwrap();
        assert_eq!(reps.len(), expected, "n = {n}");
        let forms: HashSet<_> = reps.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), expected);
    }
}

#[test]
fn six_and_seven_vertex_classes_are_distinct() {
    for (n, expected) in [(6usize, 156usize), (7, 1044)] {
        let reps = all_graphs(n).unwrap();
        assert_eq!(reps.len(), expected);
        let forms: HashSet<_> = reps.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), expected);
    }
}

#[test]
fn empty_graph_is_legal() {
    let g = Graph::empty(4).unwrap();
    assert_eq!(booksize(&g), 0);
    assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    assert!(Graph::empty(0).is_err());
}
