//! Induced minors by direct search for branch sets.
//!
//! `h` is an induced minor of `g` iff there are disjoint connected sets
//! `B_x` (one per vertex of `h`) with `B_x`, `B_y` adjacent exactly when
//! `xy` is an edge of `h`; vertices outside every branch set are deleted.

use crate::error::Result;
use crate::graph::{search_order, Graph, VertexSet};
use crate::limits::{check_cap, Limits};

/// Branch sets indexed by the vertices of `h`, or `None` when `h` is not an
/// induced minor of `g`.
pub fn has_induced_minor(g: &Graph, h: &Graph) -> Result<Option<Vec<VertexSet>>> {
    has_induced_minor_within(g, h, &Limits::default())
}

pub fn has_induced_minor_within(g: &Graph, h: &Graph, limits: &Limits) -> Result<Option<Vec<VertexSet>>> {
    check_cap("induced minor", g.n(), limits.induced_minor)?;
    if h.n() > g.n() {
        return Ok(None);
    }
    let mut connected: Vec<(VertexSet, VertexSet)> = (1u64..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| g.is_connected_set(s))
        .map(|s| (s, g.neighbors_of_set(s)))
        .collect();
    connected.sort_by_key(|(s, _)| (s.len(), s.bits()));
    let order = search_order(h);
    // Earlier vertex of `order` that is a twin of each vertex, if any.
    let twin: Vec<Option<usize>> = (0..order.len())
        .map(|d| {
            let x = order[d];
            order[..d].iter().rev().copied().find(|&y| h.neighbors(x).without(y) == h.neighbors(y).without(x))
        })
        .collect();
    let search = Search { h, order, twin, connected, n: g.n() };
    let mut branch = vec![VertexSet::EMPTY; h.n()];
    Ok(search.extend(0, VertexSet::EMPTY, &mut branch).then_some(branch))
}

struct Search<'a> {
    h: &'a Graph,
    order: Vec<usize>,
    twin: Vec<Option<usize>>,
    connected: Vec<(VertexSet, VertexSet)>,
    n: usize,
}

impl Search<'_> {
    fn extend(&self, depth: usize, used: VertexSet, branch: &mut [VertexSet]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        if self.order.len() - depth > self.n - used.len() {
            return false;
        }
        let x = self.order[depth];
        let floor = self.twin[depth].and_then(|y| branch[y].first());
        'sets: for &(s, nbhd) in &self.connected {
            if s.intersects(used) {
                continue;
            }
            if let (Some(f), Some(m)) = (floor, s.first()) {
                // Swapping the branch sets of twins is a symmetry.
                if m < f {
                    continue;
                }
            }
            for &y in &self.order[..depth] {
                if self.h.has_edge(x, y) != nbhd.intersects(branch[y]) {
                    continue 'sets;
                }
            }
            branch[x] = s;
            if self.extend(depth + 1, used | s, branch) {
                return true;
            }
        }
        branch[x] = VertexSet::EMPTY;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    /// The quotient graph of a branch-set model.
    fn quotient(g: &Graph, branch: &[VertexSet]) -> Graph {
        let mut q = Graph::new(branch.len());
        for i in 0..branch.len() {
            for j in 0..i {
                if g.neighbors_of_set(branch[i]).intersects(branch[j]) {
                    q.add_edge(i, j);
                }
            }
        }
        q
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5);
        let model = has_induced_minor(&c5, &Graph::cycle(4)).unwrap().unwrap();
        assert!(is_isomorphic(&quotient(&c5, &model), &Graph::cycle(4)).unwrap());
        let k23 = Graph::complete_bipartite(2, 3);
        let model = has_induced_minor(&k23, &k23).unwrap().unwrap();
        assert!(model.iter().all(|b| b.len() == 1));
        assert!(has_induced_minor(&Graph::cycle(6), &Graph::complete(3)).unwrap().is_some());
        assert!(has_induced_minor(&Graph::complete(4), &Graph::cycle(4)).unwrap().is_none());
        assert!(has_induced_minor(&Graph::path(5), &Graph::cycle(3)).unwrap().is_none());
        // K4 is a minor of the 3x3 grid but not an induced minor of C_6.
        assert!(has_induced_minor(&Graph::cycle(6), &Graph::complete(4)).unwrap().is_none());
        assert!(has_induced_minor(&Graph::new(10), &Graph::new(1)).is_err());
    }
}
