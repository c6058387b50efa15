use serde::Serialize;

use super::{add_to_every_bag, certify, clique_tree, tags, BoundKind, BoundedDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles::{alpha_in, fvs_min, TreeDecomposition};
use crate::patterns::{find_independent_cycles, find_induced};

/// Two sets whose union meets every cycle, with `alpha(G[s2])` bounded by
/// `10(k-1)(t-1)` for `K_{1,t}`-free, `O_k`-free graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FvsWitness {
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub k: usize,
    pub t: usize,
}

impl FvsWitness {
    pub fn alpha_bound(&self) -> usize {
        10 * self.k.saturating_sub(1) * self.t.saturating_sub(1)
    }

    /// Checks both invariants against `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        g.check_set(self.s1 | self.s2)?;
        let rest = g.vertices() - (self.s1 | self.s2);
        if !g.is_forest_in(rest) {
            return Err(Error::InvalidParameter(format!(
                "deleting {} and {} leaves a cycle",
                self.s1, self.s2
            )));
        }
        let a = alpha_in(g, self.s2);
        if a > self.alpha_bound() {
            return Err(Error::BoundViolated(format!(
                "alpha(G[S2]) = {a} above 10(k-1)(t-1) = {}",
                self.alpha_bound()
            )));
        }
        Ok(())
    }
}

/// Peels shortest cycles: a graph without a cycle gives `(∅, ∅)`; with
/// girth at least 11 it gives `(minimum feedback vertex set, ∅)`; otherwise
/// a shortest cycle `C` and its neighbourhood `N` go to `S2` and the rest of
/// the graph, which has no `k - 1` independent cycles, is handled
/// recursively.
pub fn fvs_witness(g: &Graph, k: usize, t: usize) -> Result<FvsWitness> {
    if k == 0 || t == 0 {
        return Err(Error::InvalidParameter(format!("k = {k} and t = {t} must be positive")));
    }
    let star = Graph::star(t);
    if let Some(w) = find_induced(g, &star) {
        return Err(Error::precondition(format!("graph contains an induced K1,{t}"), Some(w.to_string())));
    }
    if let Some(cycles) = find_independent_cycles(g, k) {
        let text: Vec<String> = cycles.iter().map(|c| format!("{c:?}")).collect();
        return Err(Error::precondition(
            format!("graph contains {k} independent cycles"),
            Some(text.join(" ").replace(' ', "")),
        ));
    }
    let (s1, s2) = peel(g, g.vertices(), k)?;
    let w = FvsWitness { s1, s2, k, t };
    w.check(g)?;
    Ok(w)
}

fn peel(g: &Graph, alive: VertexSet, k: usize) -> Result<(VertexSet, VertexSet)> {
    let Some(cycle) = g.shortest_cycle_in(alive) else {
        return Ok((VertexSet::EMPTY, VertexSet::EMPTY));
    };
    if cycle.len() >= 11 {
        let (_, s) = fvs_min(&g.induced(alive))?;
        let map = alive.to_vec();
        return Ok((s.iter().map(|v| map[v]).collect(), VertexSet::EMPTY));
    }
    if k <= 1 {
        return Err(Error::precondition("cycles remain after removing all independent ones", None));
    }
    let c: VertexSet = cycle.iter().copied().collect();
    let n = g.neighbors_of_set(c) & alive;
    let (r1, r2) = peel(g, alive - c - n, k - 1)?;
    Ok((r1, c | n | r2))
}

/// A clique tree of the forest `G - (S1 ∪ S2)` with `S1 ∪ S2` added to every
/// bag. Forest bags are edges or single vertices, so each bag has
/// independence number at most `|S1| + 10(k-1)(t-1) + 1`.
pub fn fvs_decomposition(g: &Graph, w: &FvsWitness) -> Result<BoundedDecomposition> {
    w.check(g).map_err(|e| Error::InvalidParameter(format!("witness does not fit the graph: {e}")))?;
    let s = w.s1 | w.s2;
    let forest = g.vertices() - s;
    let mut td = if forest.is_empty() {
        TreeDecomposition { n: g.n(), bags: vec![VertexSet::EMPTY], edges: Vec::new() }
    } else {
        clique_tree(g, forest).expect("forests are chordal")
    };
    add_to_every_bag(&mut td, s);
    certify(g, td, BoundKind::Alpha, w.s1.len() + w.alpha_bound() + 1, tags::FVS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forest_gives_empty_witness() {
        let w = fvs_witness(&Graph::path(6), 2, 3).unwrap();
        assert_eq!((w.s1, w.s2), (VertexSet::EMPTY, VertexSet::EMPTY));
        let d = fvs_decomposition(&Graph::path(6), &w).unwrap();
        assert_eq!(d.measured, 1);
    }

    #[test]
    fn short_cycle_goes_to_s2() {
        let g = Graph::cycle(5);
        let w = fvs_witness(&g, 2, 3).unwrap();
        assert_eq!((w.s1, w.s2), (VertexSet::EMPTY, g.vertices()));
        let d = fvs_decomposition(&g, &w).unwrap();
        assert_eq!(d.td.bags, vec![g.vertices()]);
        assert_eq!(d.measured, 2);
    }

    #[test]
    fn long_cycle_uses_exact_fvs() {
        let g = Graph::cycle(11);
        let w = fvs_witness(&g, 2, 3).unwrap();
        assert_eq!((w.s1.len(), w.s2), (1, VertexSet::EMPTY));
        let d = fvs_decomposition(&g, &w).unwrap();
        assert!(d.measured <= 2);
    }

    #[test]
    fn claw_edge_bags() {
        let g = Graph::star(3);
        let w = FvsWitness { s1: VertexSet::EMPTY, s2: VertexSet::EMPTY, k: 2, t: 4 };
        let d = fvs_decomposition(&g, &w).unwrap();
        assert_eq!(d.td.bags.len(), 3);
        assert_eq!(d.measured, 1);
    }

    #[test]
    fn preconditions() {
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        let err = fvs_witness(&two_triangles, 2, 3).unwrap_err();
        assert!(matches!(err, Error::Precondition { witness: Some(_), .. }));
        assert!(fvs_witness(&Graph::star(3), 2, 3).is_err());
        assert!(fvs_witness(&two_triangles, 3, 3).is_ok());
        let stale = FvsWitness { s1: VertexSet::EMPTY, s2: VertexSet::EMPTY, k: 2, t: 3 };
        assert!(fvs_decomposition(&Graph::cycle(4), &stale).is_err());
    }
}
