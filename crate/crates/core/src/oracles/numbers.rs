//! Independence, clique, chromatic and clique-cover numbers, and the induced
//! biclique number, by exhaustive branch and bound on bitsets.

use crate::graph::{Graph, VertexSet};

/// Maximum clique of the graph given by adjacency rows `adj`, restricted
/// to `cand`. Greedy-colouring bound in the style of Tomita's MCQ.
pub(crate) fn max_clique_rows(adj: &[u64], cand: u64) -> u64 {
    let mut best = 0u64;
    if cand != 0 {
        expand(adj, 0, cand, &mut best);
    }
    best
}

fn expand(adj: &[u64], current: u64, cand: u64, best: &mut u64) {
    let (order, colors) = colour_sort(adj, cand);
    let mut remaining = cand;
    let size = current.count_ones() as usize;
    for idx in (0..order.len()).rev() {
        if size + colors[idx] <= best.count_ones() as usize {
            return;
        }
        let v = order[idx];
        let grown = current | 1 << v;
        let next = remaining & adj[v];
        if next == 0 {
            if grown.count_ones() > best.count_ones() {
                *best = grown;
            }
        } else {
            expand(adj, grown, next, best);
        }
        remaining &= !(1 << v);
    }
}

/// Vertices of `cand` in order of non-decreasing greedy colour.
fn colour_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !adj[v] & !(1 << v);
            uncoloured &= !(1 << v);
            order.push(v);
            colors.push(colour);
        }
    }
    (order, colors)
}

pub(crate) fn complement_rows(g: &Graph) -> Vec<u64> {
    g.complement().adj().to_vec()
}

pub fn max_clique_in(g: &Graph, s: VertexSet) -> VertexSet {
    VertexSet::from_bits(max_clique_rows(g.adj(), s.bits()))
}

pub fn max_independent_set_in(g: &Graph, s: VertexSet) -> VertexSet {
    VertexSet::from_bits(max_clique_rows(&complement_rows(g), s.bits()))
}

pub fn alpha(g: &Graph) -> usize {
    alpha_in(g, g.vertices())
}

pub fn alpha_in(g: &Graph, s: VertexSet) -> usize {
    max_independent_set_in(g, s).len()
}

pub fn omega(g: &Graph) -> usize {
    max_clique_in(g, g.vertices()).len()
}

pub fn omega_in(g: &Graph, s: VertexSet) -> usize {
    max_clique_in(g, s).len()
}

pub fn chi(g: &Graph) -> usize {
    chromatic_rows(g.adj(), g.vertices().bits())
}

pub fn chi_in(g: &Graph, s: VertexSet) -> usize {
    chromatic_rows(g.adj(), s.bits())
}

/// Clique cover number; equals `chi` of the complement.
pub fn theta(g: &Graph) -> usize {
    theta_in(g, g.vertices())
}

pub fn theta_in(g: &Graph, s: VertexSet) -> usize {
    chromatic_rows(&complement_rows(g), s.bits())
}

pub(crate) fn chromatic_rows(adj: &[u64], s: u64) -> usize {
    if s == 0 {
        return 0;
    }
    let clique = max_clique_rows(adj, s);
    let lower = clique.count_ones() as usize;
    // Clique first, then the rest by decreasing degree inside s.
    let mut order: Vec<usize> = VertexSet::from_bits(clique).to_vec();
    let mut rest: Vec<usize> = VertexSet::from_bits(s & !clique).to_vec();
    rest.sort_by_key(|&v| (std::cmp::Reverse((adj[v] & s).count_ones()), v));
    order.extend(rest);
    let upper = greedy_colours(adj, &order);
    for k in lower..upper {
        let mut classes = vec![0u64; k];
        if colour_rec(adj, &order, 0, &mut classes, 0) {
            return k;
        }
    }
    upper
}

fn greedy_colours(adj: &[u64], order: &[usize]) -> usize {
    let mut classes: Vec<u64> = Vec::new();
    for &v in order {
        match classes.iter_mut().find(|c| **c & adj[v] == 0) {
            Some(c) => *c |= 1 << v,
            None => classes.push(1 << v),
        }
    }
    classes.len()
}

fn colour_rec(adj: &[u64], order: &[usize], i: usize, classes: &mut [u64], used: usize) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if classes[c] & adj[v] == 0 {
            classes[c] |= 1 << v;
            if colour_rec(adj, order, i + 1, classes, used.max(c + 1)) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
    }
    false
}

/// Largest `s` with an induced `K_{s,s}`, with its two sides.
///
/// Every induced `K_{s,s}` has an independent side `A` and an independent
/// `B` inside the common neighbourhood of `A`, so the search ranges over
/// independent sets `A` and takes `min(|A|, alpha(common nbhd))`.
pub fn ibn_with_witness(g: &Graph) -> (usize, VertexSet, VertexSet) {
    let comp = complement_rows(g);
    let mut best = (0, VertexSet::EMPTY, VertexSet::EMPTY);
    ibn_rec(g, &comp, VertexSet::EMPTY, g.vertices(), g.vertices(), &mut best);
    best
}

pub fn ibn(g: &Graph) -> usize {
    ibn_with_witness(g).0
}

fn ibn_rec(
    g: &Graph,
    comp: &[u64],
    side: VertexSet,
    common: VertexSet,
    allowed: VertexSet,
    best: &mut (usize, VertexSet, VertexSet),
) {
    if common.len() <= best.0 {
        return;
    }
    if !side.is_empty() && side.len() > best.0 {
        let other = VertexSet::from_bits(max_clique_rows(comp, common.bits()));
        let s = side.len().min(other.len());
        if s > best.0 {
            let trimmed_side: VertexSet = side.iter().take(s).collect();
            let trimmed_other: VertexSet = other.iter().take(s).collect();
            *best = (s, trimmed_side, trimmed_other);
        }
    }
    for v in allowed {
        let next_common = common & g.neighbors(v);
        // Later members must be non-adjacent to v and larger than v.
        let next_allowed = VertexSet::from_bits(allowed.bits() & comp[v] & !((2u64 << v).wrapping_sub(1)));
        ibn_rec(g, comp, side.with(v), next_common, next_allowed, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_numbers() {
        let c5 = Graph::cycle(5);
        assert_eq!((alpha(&c5), omega(&c5), chi(&c5), theta(&c5)), (2, 2, 3, 3));
    }

    #[test]
    fn complete_and_empty() {
        assert_eq!(chi(&Graph::complete(6)), 6);
        assert_eq!(theta(&Graph::complete(6)), 1);
        assert_eq!(alpha(&Graph::empty(7)), 7);
        assert_eq!(chi(&Graph::new(0)), 0);
        assert_eq!(alpha(&Graph::new(0)), 0);
    }

    #[test]
    fn chromatic_examples() {
        // Petersen graph: chi = 3, alpha = 4.
        let mut p = Graph::new(10);
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5);
            p.add_edge(i, i + 5);
            p.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        assert_eq!(chi(&p), 3);
        assert_eq!(alpha(&p), 4);
        assert_eq!(chi(&Graph::cycle(7)), 3);
        assert_eq!(chi(&Graph::complete_bipartite(3, 4)), 2);
        // Wheel on 6 vertices (odd rim): chi = 4.
        let w = Graph::complete(1).join(&Graph::cycle(5)).unwrap();
        assert_eq!(chi(&w), 4);
    }

    #[test]
    fn ibn_examples() {
        assert_eq!(ibn(&Graph::complete_bipartite(3, 3)), 3);
        assert_eq!(ibn(&Graph::cycle(4)), 2);
        assert_eq!(ibn(&Graph::cycle(5)), 1);
        assert_eq!(ibn(&Graph::empty(4)), 0);
        assert_eq!(ibn(&Graph::complete(5)), 1);
        let (s, a, b) = ibn_with_witness(&Graph::complete_bipartite(2, 4));
        assert_eq!(s, 2);
        assert!(a.len() == 2 && b.len() == 2);
    }

    #[test]
    fn ibn_matches_brute_force() {
        // Exhaustive check of every pair of disjoint subsets on random graphs.
        let mut seed = 7u64;
        for _ in 0..40 {
            let mut g = Graph::new(7);
            for j in 1..7 {
                for i in 0..j {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                    if seed >> 62 != 0 {
                        g.add_edge(i, j);
                    }
                }
            }
            let mut brute = 0;
            for a in 0u64..128 {
                let a = VertexSet::from_bits(a);
                if !g.is_independent(a) {
                    continue;
                }
                for b in 0u64..128 {
                    let b = VertexSet::from_bits(b);
                    if a.intersects(b) || a.len() != b.len() || !g.is_independent(b) {
                        continue;
                    }
                    if a.iter().all(|u| b.is_subset(g.neighbors(u))) {
                        brute = brute.max(a.len());
                    }
                }
            }
            assert_eq!(ibn(&g), brute, "{g:?}");
        }
    }
}
