//! Independent cycles: vertex-disjoint cycles with no edges between them.
//!
//! The search only considers chordless cycles. Any cycle contains a
//! chordless cycle on a subset of its vertices, and having no edges between
//! two vertex sets is inherited by subsets, so `k` independent cycles exist
//! iff `k` independent chordless ones do.

use crate::graph::{Graph, VertexSet};

/// `k` pairwise independent cycles, each in cyclic order, or `None` if the
/// graph is `O_k`-free. `k = 0` always yields the empty witness.
pub fn find_independent_cycles(g: &Graph, k: usize) -> Option<Vec<Vec<usize>>> {
    if k == 0 {
        return Some(Vec::new());
    }
    if k == 1 {
        return g.shortest_cycle_in(g.vertices()).map(|c| vec![c]);
    }
    let mut chosen = Vec::new();
    pick(g, g.vertices(), k, &mut chosen).then_some(chosen)
}

pub fn is_ok_free(g: &Graph, k: usize) -> bool {
    find_independent_cycles(g, k).is_none()
}

/// Chooses cycles in increasing order of their smallest vertex.
fn pick(g: &Graph, allowed: VertexSet, k: usize, chosen: &mut Vec<Vec<usize>>) -> bool {
    if k == 0 {
        return true;
    }
    if k == 1 {
        if let Some(c) = g.shortest_cycle_in(allowed) {
            chosen.push(c);
            return true;
        }
        return false;
    }
    // Cheap necessary condition: each cycle needs three vertices.
    if allowed.len() < 3 * k {
        return false;
    }
    for v in allowed {
        let above: VertexSet = allowed.iter().filter(|&u| u >= v).collect();
        let found = for_each_hole_at(g, v, above, &mut |cycle: &[usize]| {
            let set: VertexSet = cycle.iter().copied().collect();
            let closed = set | g.neighbors_of_set(set);
            let rest: VertexSet = (above - closed).iter().filter(|&u| u > v).collect();
            chosen.push(cycle.to_vec());
            if pick(g, rest, k - 1, chosen) {
                return true;
            }
            chosen.pop();
            false
        });
        if found {
            return true;
        }
    }
    false
}

/// Calls `f` on every chordless cycle whose smallest vertex is `v` and whose
/// vertices lie in `within`, once per cycle; stops when `f` returns true.
pub(crate) fn for_each_hole_at(
    g: &Graph,
    v: usize,
    within: VertexSet,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let mut path = vec![v];
    let above = VertexSet::from_bits(within.bits() & !((2u64 << v).wrapping_sub(1)));
    grow(g, v, above, &mut path, f)
}

fn grow(g: &Graph, v: usize, free: VertexSet, path: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let last = *path.last().expect("nonempty");
    // Vertices adjacent to an interior path vertex would create a chord.
    let interior = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
    let blocked = interior.iter().fold(VertexSet::EMPTY, |acc, &u| acc | g.neighbors(u));
    for x in g.neighbors(last) & free {
        if blocked.contains(x) {
            continue;
        }
        let closes = path.len() >= 2 && g.has_edge(x, v);
        if closes {
            // Each cycle is met in both directions; keep the one whose
            // second vertex is smaller than its last.
            if path[1] < x {
                path.push(x);
                let stop = f(path);
                path.pop();
                if stop {
                    return true;
                }
            }
            continue;
        }
        path.push(x);
        let stop = grow(g, v, free.without(x), path, f);
        path.pop();
        if stop {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        let w = find_independent_cycles(&g, 2).unwrap();
        assert_eq!(w, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(is_ok_free(&g, 3));
    }

    #[test]
    fn forests_and_adjacent_cycles() {
        assert!(is_ok_free(&Graph::path(6), 1));
        assert!(!is_ok_free(&Graph::cycle(6), 1));
        // Two triangles joined by an edge are not independent.
        let mut g = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        g.add_edge(2, 3);
        assert!(is_ok_free(&g, 2));
        // A long cycle has no two independent cycles.
        assert!(is_ok_free(&Graph::cycle(9), 2));
        assert!(!is_ok_free(&Graph::grid(3, 5), 2));
        assert!(is_ok_free(&Graph::grid(3, 4), 2));
    }

    #[test]
    fn counts_chordless_cycles() {
        let mut count = 0;
        let k4 = Graph::complete(4);
        for v in 0..4 {
            for_each_hole_at(&k4, v, k4.vertices(), &mut |_| {
                count += 1;
                false
            });
        }
        assert_eq!(count, 4); // the four triangles
        let mut count = 0;
        let k33 = Graph::complete_bipartite(3, 3);
        for v in 0..6 {
            for_each_hole_at(&k33, v, k33.vertices(), &mut |_| {
                count += 1;
                false
            });
        }
        assert_eq!(count, 9);
    }
}
