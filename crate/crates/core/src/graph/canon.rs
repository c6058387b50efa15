//! Canonical labelling by colour refinement plus individualisation.
//!
//! The search tree is explored fully apart from one pruning rule: inside the
//! target cell only one vertex per twin class is individualised, since
//! swapping two twins is an automorphism fixing the current partition.

use std::fmt;

use super::{Graph, VertexSet};
use crate::error::Result;
use crate::io::graph6;
use crate::limits::{check_cap, CANON_MAX_VERTICES};

/// The graph6 encoding of the canonical relabelling. Equal forms mean
/// isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // graph6 output is printable ASCII.
        std::str::from_utf8(&self.0).expect("graph6 is ascii")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_cap("canonical form", g.n(), CANON_MAX_VERTICES)?;
    let labels = canonical_labeling(g);
    Ok(CanonicalForm(graph6::encode(&relabel(g, &labels)).into_bytes()))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// `labels[v]` is the new name of vertex `v`.
pub(crate) fn relabel(g: &Graph, labels: &[usize]) -> Graph {
    let mut h = Graph::new(g.n());
    for (u, v) in g.edges() {
        h.add_edge(labels[u], labels[v]);
    }
    h
}

fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    search(g, vec![0; n], &mut best);
    best.expect("search reaches a leaf").1
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<(u128, Vec<usize>)>) {
    let colors = refine(g, colors);
    let n = g.n();
    let mut cell_size = vec![0usize; n];
    for &c in &colors {
        cell_size[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| cell_size[c] > 1) else {
        let code = leaf_code(g, &colors);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, colors));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == target) {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let next = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| match c.cmp(&target) {
                std::cmp::Ordering::Greater => c + 1,
                std::cmp::Ordering::Equal if u != v => c + 1,
                _ => c,
            })
            .collect();
        search(g, next, best);
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

/// Iterated colour refinement. New colours are ranks of the sorted
/// signatures `(old colour, neighbour counts per colour)`, so the result
/// depends only on the coloured graph up to isomorphism.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut k = colors.iter().max().map_or(0, |&c| c + 1);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; k];
                for w in g.neighbors(v) {
                    counts[colors[w]] += 1;
                }
                (colors[v], counts)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next_k = sorted.len();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).expect("present"))
            .collect();
        colors = next;
        if next_k == k {
            return colors;
        }
        k = next_k;
    }
}

fn leaf_code(g: &Graph, labels: &[usize]) -> u128 {
    let n = g.n();
    let mut inv = vec![0usize; n];
    for (v, &l) in labels.iter().enumerate() {
        inv[l] = v;
    }
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | g.has_edge(inv[i], inv[j]) as u128;
        }
    }
    code
}

/// An isomorphism `a -> b` as a vertex map, found by backtracking.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let order = search_order(a);
    let mut map = vec![usize::MAX; a.n()];
    extend(a, b, &order, 0, &mut map, VertexSet::EMPTY).then_some(map)
}

/// Vertices of `a` so that each one after the first in a component has an
/// earlier neighbour; high degree first.
pub(crate) fn search_order(a: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(a.n());
    let mut placed = VertexSet::EMPTY;
    while order.len() < a.n() {
        let frontier = a.neighbors_of_set(placed) - placed;
        let pool = if frontier.is_empty() { a.vertices() - placed } else { frontier };
        let v = pool
            .iter()
            .max_by_key(|&v| ((a.neighbors(v) & placed).len(), a.degree(v), usize::MAX - v))
            .expect("nonempty");
        order.push(v);
        placed.insert(v);
    }
    order
}

fn extend(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in b.vertices() - used {
        if b.degree(w) != a.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            if extend(a, b, order, depth + 1, map, used.with(w)) {
                return true;
            }
        }
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert!(is_isomorphic(&Graph::cycle(5), &Graph::cycle(5).complement()).unwrap());
        assert!(!is_isomorphic(&Graph::star(3), &Graph::complete(3)).unwrap());
        assert!(!is_isomorphic(&Graph::star(3), &Graph::path(4)).unwrap());
        assert!(find_isomorphism(&Graph::cycle(6), &Graph::complete(3).subdivide_all().unwrap()).is_some());
        let petersen = petersen();
        assert!(canonical_form(&petersen).is_ok());
        assert!(canonical_form(&Graph::new(17)).is_err());
    }

    #[test]
    fn regular_graphs_are_told_apart() {
        // C6 and two triangles are both 2-regular on six vertices.
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        assert!(!is_isomorphic(&Graph::cycle(6), &two_triangles).unwrap());
        // K_{3,3} and the triangular prism are both cubic on six vertices.
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!is_isomorphic(&Graph::complete_bipartite(3, 3), &prism).unwrap());
    }

    pub(crate) fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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
        fn canonical_form_ignores_relabelling(g in arb_graph(9), seed in any::<u64>()) {
            let n = g.n();
            let mut labels: Vec<usize> = (0..n).collect();
            // Fisher-Yates driven by the seed.
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                labels.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = relabel(&g, &labels);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            prop_assert!(find_isomorphism(&g, &h).is_some());
        }
    }
}
