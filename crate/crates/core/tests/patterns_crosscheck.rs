//! Pattern search, independent cycles, induced minors and classification
//! against brute-force definitions.

mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use treealpha::generators::enumerate_graphs;
use treealpha::graph::{canonical_form, is_isomorphic, CanonicalForm};
use treealpha::patterns::{
    classify, find_independent_cycles, find_induced, find_subgraph, has_induced_minor, is_ok_free,
    is_paw_free_structured, names, ClassFilter, ClassParams, PatternSpec,
};
use treealpha::{Graph, VertexSet};

fn pattern(name: &str) -> Graph {
    PatternSpec::named(name).unwrap().to_graph().unwrap()
}

fn all_up_to(n_max: usize) -> Vec<Graph> {
    (0..=n_max).flat_map(|n| enumerate_graphs(n, None).unwrap().map(|g| g.unwrap())).collect()
}

fn brute_induced(g: &Graph, h: &Graph) -> bool {
    common::subsets(g.vertices())
        .filter(|s| s.len() == h.n())
        .any(|s| is_isomorphic(&g.induced_subgraph(s).unwrap(), h).unwrap())
}

/// Two disjoint vertex sets, each spanning a cycle, with no edge between.
fn brute_two_independent_cycles(g: &Graph) -> bool {
    common::subsets(g.vertices()).any(|s1| {
        let far = g.vertices() - s1 - g.neighbors_of_set(s1);
        !g.is_forest_in(s1) && !g.is_forest_in(far)
    })
}

/// Every induced minor of `g` on `h.n()` vertices, by deletions and
/// contractions, memoised on canonical forms.
fn brute_induced_minor(g: &Graph, h: &Graph, seen: &mut HashSet<CanonicalForm>) -> bool {
    if g.n() < h.n() || g.edge_count() < h.edge_count() || !seen.insert(canonical_form(g).unwrap()) {
        return false;
    }
    if g.n() == h.n() {
        return is_isomorphic(g, h).unwrap();
    }
    for v in 0..g.n() {
        if brute_induced_minor(&g.delete_vertices(VertexSet::singleton(v)), h, seen) {
            return true;
        }
    }
    for (u, v) in g.edges() {
        if brute_induced_minor(&g.contract_edge(u, v).unwrap(), h, seen) {
            return true;
        }
    }
    false
}

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

proptest! {
    #[test]
    fn induced_search_matches_brute_force(g in arb_graph(8), which in 0usize..6) {
        let name = ["P4", "C4", "paw", "K3+K1", "P3+P1", "2K2"][which];
        let h = pattern(name);
        let found = find_induced(&g, &h);
        prop_assert_eq!(found.is_some(), brute_induced(&g, &h));
        if let Some(w) = found {
            prop_assert!(is_isomorphic(&g.induced_subgraph(w).unwrap(), &h).unwrap());
        }
    }

    #[test]
    fn subgraph_witness_is_a_copy(g in arb_graph(8), which in 0usize..3) {
        let h = pattern(["C4", "2K2", "K1,3"][which]);
        if let Some(map) = find_subgraph(&g, &h) {
            let image: VertexSet = map.iter().copied().collect();
            prop_assert_eq!(image.len(), h.n());
            for (a, b) in h.edges() {
                prop_assert!(g.has_edge(map[a], map[b]));
            }
        }
    }

    #[test]
    fn two_independent_cycles_match_brute_force(g in arb_graph(9)) {
        prop_assert_eq!(!is_ok_free(&g, 2), brute_two_independent_cycles(&g));
        if let Some(cs) = find_independent_cycles(&g, 2) {
            let sets: Vec<VertexSet> = cs.iter().map(|c| c.iter().copied().collect()).collect();
            prop_assert!(!sets[0].intersects(sets[1] | g.neighbors_of_set(sets[1])));
            for c in &cs {
                prop_assert!(c.len() >= 3);
                for i in 0..c.len() {
                    prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
        }
    }

    #[test]
    fn filter_text_round_trips(which in 0usize..5) {
        let text = ["chordal", "K1,3-free & O2-free", "{P4+P1,C4}-free & !chordal", "2K1,3-subgraph-free", "K2,3-induced-minor-free"][which];
        let f: ClassFilter = text.parse().unwrap();
        let again: ClassFilter = f.to_string().parse().unwrap();
        prop_assert_eq!(f, again);
    }
}

#[test]
fn olariu_structure_matches_paw_search() {
    let paw = pattern(names::PAW);
    for g in all_up_to(7) {
        assert_eq!(is_paw_free_structured(&g), find_induced(&g, &paw).is_none(), "{g:?}");
    }
}

#[test]
fn k23_induced_minor_matches_contraction_search() {
    let k23 = pattern(names::K23);
    for g in all_up_to(7) {
        let lib = has_induced_minor(&g, &k23).unwrap();
        assert_eq!(lib.is_some(), brute_induced_minor(&g, &k23, &mut HashSet::new()), "{g:?}");
        if let Some(branch) = lib {
            assert_eq!(branch.len(), 5);
            for (i, &b) in branch.iter().enumerate() {
                assert!(g.is_connected_set(b));
                for (j, &c) in branch.iter().enumerate().skip(i + 1) {
                    assert!(!b.intersects(c));
                    let adjacent = !(g.neighbors_of_set(b) & c).is_empty();
                    assert_eq!(adjacent, k23.has_edge(i, j));
                }
            }
        }
    }
}

#[test]
fn two_stars_force_bicliques_in_line_complements() {
    for s in 1..=2 {
        let stars = pattern(&names::two_stars(s));
        let kss = Graph::complete_bipartite(s, s);
        for h in all_up_to(6) {
            if find_subgraph(&h, &stars).is_some() {
                let co = h.line_graph().unwrap().complement();
                assert!(find_induced(&co, &kss).is_some(), "{h:?}");
            }
        }
    }
}

#[test]
fn negative_entries_carry_witnesses() {
    for g in all_up_to(6) {
        let r = classify(&g, ClassParams::default()).unwrap();
        for e in &r.entries {
            assert_eq!(e.member, e.witness.is_none(), "{} on {g:?}", e.name);
        }
    }
}
