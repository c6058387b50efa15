//! Library oracles against the literal brute-force definitions in
//! `common`.

mod common;

use proptest::prelude::*;
use treealpha::oracles::{self, TreeDecomposition};
use treealpha::patterns::is_chordal;
use treealpha::{Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_td(n: usize) -> impl Strategy<Value = TreeDecomposition> {
    (1usize..=5).prop_flat_map(move |m| {
        (
            proptest::collection::vec(0u64..1 << n, m),
            proptest::collection::vec(any::<usize>(), m.saturating_sub(1)),
        )
            .prop_map(move |(bags, parents)| TreeDecomposition {
                n,
                bags: bags.into_iter().map(VertexSet::from_bits).collect(),
                edges: parents.iter().enumerate().map(|(i, &p)| (p % (i + 1), i + 1)).collect(),
            })
    })
}

proptest! {
    #[test]
    fn numbers_match_brute_force(g in arb_graph(9)) {
        let all = g.vertices();
        prop_assert_eq!(oracles::alpha(&g), common::brute_alpha(&g, all));
        prop_assert_eq!(oracles::omega(&g), common::brute_omega(&g, all));
        prop_assert_eq!(oracles::theta(&g), common::brute_theta(&g, all));
        prop_assert_eq!(oracles::chi(&g), common::brute_theta(&g.complement(), all));
    }

    #[test]
    fn chordality_matches_brute_force(g in arb_graph(8)) {
        prop_assert_eq!(is_chordal(&g), common::brute_chordal(&g));
    }

    #[test]
    fn validation_matches_brute_force((g, td) in (1usize..=6).prop_flat_map(|n| (arb_graph(n).prop_filter("order", move |g| g.n() == n), arb_td(n)))) {
        prop_assert_eq!(td.is_valid(&g), common::brute_td_valid(&g, &td));
    }

    #[test]
    fn oracle_decompositions_are_valid(g in arb_graph(8)) {
        let (a, td) = oracles::tree_alpha(&g).unwrap();
        prop_assert!(common::brute_td_valid(&g, &td));
        prop_assert_eq!(td.bags.iter().map(|&b| common::brute_alpha(&g, b)).max().unwrap_or(0), a);
        let (t, td) = oracles::tree_theta(&g).unwrap();
        prop_assert!(common::brute_td_valid(&g, &td));
        prop_assert_eq!(td.bags.iter().map(|&b| common::brute_theta(&g, b)).max().unwrap_or(0), t);
        prop_assert!(oracles::ibn(&g) <= a && a <= t);
    }
}

#[test]
fn prufer_counts() {
    for m in 1..=5 {
        assert_eq!(common::prufer_trees(m).len(), if m == 1 { 1 } else { m.pow(m as u32 - 2) });
    }
}
