//! Induced-subgraph and subgraph search by backtracking over vertex maps.

use crate::graph::{Graph, VertexSet};

struct Embedder<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    induced: bool,
}

impl<'a> Embedder<'a> {
    fn new(g: &'a Graph, h: &'a Graph, induced: bool) -> Self {
        // Pattern vertices in an order where each one has an earlier
        // neighbour whenever possible; high degree first.
        let order = crate::graph::search_order(h);
        Embedder { g, h, order, induced }
    }

    /// A map of `h` into `pool` whose image contains `forced`.
    fn find(&self, pool: VertexSet, forced: VertexSet) -> Option<Vec<usize>> {
        if self.h.n() > pool.len() || !forced.is_subset(pool) || forced.len() > self.h.n() {
            return None;
        }
        let mut map = vec![usize::MAX; self.h.n()];
        self.extend(0, pool, forced, VertexSet::EMPTY, &mut map).then_some(map)
    }

    fn extend(&self, depth: usize, pool: VertexSet, forced: VertexSet, used: VertexSet, map: &mut [usize]) -> bool {
        let missing = forced - used;
        if depth == self.order.len() {
            return missing.is_empty();
        }
        if missing.len() > self.order.len() - depth {
            return false;
        }
        let x = self.order[depth];
        let mut cand = pool - used;
        if missing.len() == self.order.len() - depth {
            cand &= missing;
        }
        for &y in &self.order[..depth] {
            if self.h.has_edge(x, y) {
                cand &= self.g.neighbors(map[y]);
            } else if self.induced {
                cand -= self.g.neighbors(map[y]);
            }
        }
        let need = self.h.degree(x);
        for v in cand {
            if (self.g.neighbors(v) & pool).len() < need {
                continue;
            }
            map[x] = v;
            if self.extend(depth + 1, pool, forced, used.with(v), map) {
                return true;
            }
        }
        map[x] = usize::MAX;
        false
    }

    /// The lexicographically smallest image set, fixing one vertex at a time.
    fn smallest_image(&self) -> Option<VertexSet> {
        let mut pool = self.g.vertices();
        let mut forced = VertexSet::EMPTY;
        self.find(pool, forced)?;
        for v in self.g.vertices() {
            if forced.len() == self.h.n() {
                break;
            }
            if self.find(pool, forced.with(v)).is_some() {
                forced.insert(v);
            } else {
                pool.remove(v);
            }
        }
        Some(forced)
    }
}

/// The lexicographically smallest vertex set of `g` inducing a copy of `h`.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<VertexSet> {
    if h.n() > g.n() {
        return None;
    }
    Embedder::new(g, h, true).smallest_image()
}

/// An induced copy of `h` using only vertices of `pool`, as a map from
/// vertices of `h`.
pub fn find_induced_map(g: &Graph, h: &Graph, pool: VertexSet) -> Option<Vec<usize>> {
    Embedder::new(g, h, true).find(pool, VertexSet::EMPTY)
}

/// A (not necessarily induced) copy of `h` in `g`, as a map from vertices
/// of `h` to vertices of `g`.
pub fn find_subgraph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return None;
    }
    Embedder::new(g, h, false).find(g.vertices(), VertexSet::EMPTY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use crate::patterns::PatternSpec;

    fn pat(s: &str) -> Graph {
        s.parse::<PatternSpec>().unwrap().to_graph().unwrap()
    }

    #[test]
    fn induced_examples() {
        let paw = pat("paw");
        assert_eq!(find_induced(&paw, &pat("K3")), Some(VertexSet::from(vec![0, 1, 2])));
        let c5 = Graph::cycle(5);
        let w = find_induced(&c5, &Graph::path(4)).unwrap();
        assert_eq!(w, VertexSet::from(vec![0, 1, 2, 3]));
        assert!(find_induced(&c5, &Graph::cycle(4)).is_none());
        assert!(find_induced(&Graph::complete(4), &Graph::cycle(4)).is_none());
        assert!(find_induced(&Graph::complete_bipartite(3, 3), &Graph::cycle(4)).is_some());
    }

    #[test]
    fn subgraph_examples() {
        assert!(find_subgraph(&Graph::complete(4), &Graph::cycle(4)).is_some());
        assert!(find_subgraph(&Graph::star(3), &pat("2K2")).is_none());
        let map = find_subgraph(&Graph::path(5), &pat("2K2")).unwrap();
        assert!(Graph::path(5).has_edge(map[0], map[1]) && Graph::path(5).has_edge(map[2], map[3]));
    }

    #[test]
    fn witnesses_are_lexicographically_smallest_and_correct() {
        let mut seed = 3u64;
        for _ in 0..200 {
            let mut g = Graph::new(7);
            for j in 1..7 {
                for i in 0..j {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if seed >> 63 == 1 {
                        g.add_edge(i, j);
                    }
                }
            }
            for name in ["P4", "C4", "paw", "K2+K1", "P3+P1", "claw"] {
                let h = pat(name);
                let brute = (0u64..128)
                    .map(VertexSet::from_bits)
                    .filter(|s| s.len() == h.n())
                    .filter(|&s| is_isomorphic(&g.induced_subgraph(s).unwrap(), &h).unwrap())
                    .min_by_key(|s| s.to_vec());
                assert_eq!(find_induced(&g, &h), brute, "{name} in {g:?}");
            }
        }
    }
}
