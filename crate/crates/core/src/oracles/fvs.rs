//! Minimum feedback vertex set by iterative deepening.
//!
//! Vertices of degree at most one never lie on a cycle and are peeled off
//! first; any solution must then hit a shortest remaining cycle, so the
//! search branches on its vertices.

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::limits::{check_cap, MAX_VERTICES};

pub fn fvs_min(g: &Graph) -> Result<(usize, VertexSet)> {
    check_cap("feedback vertex set", g.n(), MAX_VERTICES)?;
    let alive = peel(g, g.vertices());
    for budget in 0..=g.n() {
        if let Some(s) = search(g, alive, budget) {
            return Ok((s.len(), s));
        }
    }
    unreachable!("deleting every vertex leaves a forest")
}

fn peel(g: &Graph, mut alive: VertexSet) -> VertexSet {
    loop {
        let low: VertexSet = alive.iter().filter(|&v| (g.neighbors(v) & alive).len() <= 1).collect();
        if low.is_empty() {
            return alive;
        }
        alive -= low;
    }
}

fn search(g: &Graph, alive: VertexSet, budget: usize) -> Option<VertexSet> {
    let Some(cycle) = g.shortest_cycle_in(alive) else {
        return Some(VertexSet::EMPTY);
    };
    if budget == 0 {
        return None;
    }
    let mut branch = cycle.clone();
    branch.sort_unstable();
    for v in branch {
        if let Some(rest) = search(g, peel(g, alive.without(v)), budget - 1) {
            return Some(rest.with(v));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(fvs_min(&Graph::path(6)).unwrap().0, 0);
        assert_eq!(fvs_min(&Graph::cycle(5)).unwrap().0, 1);
        assert_eq!(fvs_min(&Graph::complete(5)).unwrap().0, 3);
        assert_eq!(fvs_min(&Graph::complete_bipartite(3, 3)).unwrap().0, 2);
        assert_eq!(fvs_min(&Graph::grid(3, 3)).unwrap().0, 2);
    }

    #[test]
    fn matches_brute_force() {
        let mut seed = 99u64;
        for _ in 0..60 {
            let mut g = Graph::new(8);
            for j in 1..8 {
                for i in 0..j {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if seed >> 61 < 3 {
                        g.add_edge(i, j);
                    }
                }
            }
            let brute = (0u64..256)
                .filter(|&m| g.is_forest_in(g.vertices() - VertexSet::from_bits(m)))
                .map(|m| m.count_ones() as usize)
                .min()
                .unwrap();
            let (k, s) = fvs_min(&g).unwrap();
            assert_eq!(k, brute);
            assert!(g.is_forest_in(g.vertices() - s));
            assert!(k <= g.cycle_rank());
        }
    }
}
