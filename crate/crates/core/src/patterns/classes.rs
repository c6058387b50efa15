//! Membership tests for the hereditary classes that have structural
//! characterisations.

use crate::graph::{Graph, VertexSet};
use crate::oracles::{max_clique_in, omega};

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// A perfect elimination ordering (each vertex's later neighbours form a
/// clique), from maximum cardinality search; `None` if `g` is not chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = VertexSet::EMPTY;
    // Search order; its reverse is a perfect elimination ordering.
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (g.vertices() - numbered).iter().max_by_key(|&v| (weight[v], usize::MAX - v)).expect("unnumbered");
        for w in g.neighbors(v) - numbered {
            weight[w] += 1;
        }
        numbered.insert(v);
        order.push(v);
    }
    let mut earlier = VertexSet::EMPTY;
    for &v in &order {
        // Neighbours searched before v must form a clique.
        let back = g.neighbors(v) & earlier;
        if let Some(latest) = order.iter().rev().find(|&&u| back.contains(u)) {
            if !back.without(*latest).is_subset(g.neighbors(*latest)) {
                return None;
            }
        }
        earlier.insert(v);
    }
    order.reverse();
    Some(order)
}

/// A shortest hole (chordless cycle of length at least 4), in cyclic order.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    if is_chordal(g) {
        return None;
    }
    for k in 4..=g.n() {
        if let Some(map) = super::search::find_induced_map(g, &Graph::cycle(k), g.vertices()) {
            return Some(map);
        }
    }
    unreachable!("a non-chordal graph has a hole")
}

pub fn is_triangle_free(g: &Graph) -> bool {
    omega(g) <= 2
}

pub fn find_triangle(g: &Graph) -> Option<VertexSet> {
    let c = max_clique_in(g, g.vertices());
    (c.len() >= 3).then(|| c.iter().take(3).collect())
}

/// Non-adjacency is an equivalence relation, i.e. non-adjacent vertices
/// have equal neighbourhoods.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    g.vertices().iter().all(|u| {
        (g.vertices() - g.closed_neighbors(u)).iter().all(|v| g.neighbors(u) == g.neighbors(v))
    })
}

/// Paw-freeness through the componentwise characterisation: every
/// component is triangle-free or complete multipartite.
pub fn is_paw_free_structured(g: &Graph) -> bool {
    g.components().into_iter().all(|c| {
        let h = g.induced_subgraph(c).expect("component in range");
        is_triangle_free(&h) || is_complete_multipartite(&h)
    })
}

/// The parts of a complete multipartite graph, by smallest member.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<VertexSet>> {
    if !is_complete_multipartite(g) {
        return None;
    }
    let mut parts: Vec<VertexSet> = Vec::new();
    let mut seen = VertexSet::EMPTY;
    for v in g.vertices() {
        if !seen.contains(v) {
            let part = g.vertices() - g.neighbors(v);
            seen |= part;
            parts.push(part);
        }
    }
    Some(parts)
}
