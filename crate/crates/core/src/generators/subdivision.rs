use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::oracles::{tree_alpha_within, treewidth_within};

/// Treewidth before and after subdividing every edge, and whether the
/// subdivided (bipartite) graph satisfies `tw <= 2 * tree-alpha - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionReport {
    pub tw: usize,
    pub tw_subdivided: usize,
    pub tree_alpha_subdivided: usize,
    pub holds: bool,
}

pub fn subdivision_lower_bound_check(g: &Graph) -> Result<SubdivisionReport> {
    subdivision_lower_bound_check_within(g, &Limits::default())
}

pub fn subdivision_lower_bound_check_within(g: &Graph, limits: &Limits) -> Result<SubdivisionReport> {
    let s = g.subdivide_all()?;
    let (tw_subdivided, _) = treewidth_within(&s, limits)?;
    let (ta, _) = tree_alpha_within(&s, limits)?;
    let (tw, _) = treewidth_within(g, limits)?;
    Ok(SubdivisionReport {
        tw,
        tw_subdivided,
        tree_alpha_subdivided: ta,
        holds: tw_subdivided < 2 * ta,
    })
}

/// `tw(G) <= 2 tree-alpha(G) - 1` for a bipartite `G` with at least one vertex.
pub fn bipartite_inequality_holds(g: &Graph, limits: &Limits) -> Result<bool> {
    let (tw, _) = treewidth_within(g, limits)?;
    let (ta, _) = tree_alpha_within(g, limits)?;
    Ok(tw < 2 * ta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_k4() {
        let r = subdivision_lower_bound_check(&Graph::complete(3)).unwrap();
        assert_eq!((r.tw, r.tw_subdivided, r.holds), (2, 2, true));
        let r = subdivision_lower_bound_check(&Graph::complete(4)).unwrap();
        assert_eq!((r.tw, r.tw_subdivided, r.holds), (3, 3, true));
        assert!(subdivision_lower_bound_check(&Graph::complete(5)).is_err());
    }
}
