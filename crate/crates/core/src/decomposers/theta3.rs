use super::{certify, tags, BoundKind, BoundedDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::oracles::{alpha_of_decomposition, tree_alpha_within};
use crate::patterns::{find_induced, names, PatternSpec};

/// For `{P4+P1, C4}`-free graphs: an optimal tree-alpha decomposition has
/// bags of independence number at most 3, and the complement of each bag is
/// `{2K2, gem}`-free, so every bag is covered by at most
/// `max(alpha, 3) = 3` cliques. Certified with the clique cover oracle.
pub fn tree_theta_3_decomposition(g: &Graph) -> Result<BoundedDecomposition> {
    tree_theta_3_decomposition_within(g, &Limits::default())
}

pub fn tree_theta_3_decomposition_within(g: &Graph, limits: &Limits) -> Result<BoundedDecomposition> {
    for name in names::P4P1_C4 {
        let h = PatternSpec::named(name)?.to_graph()?;
        if let Some(w) = find_induced(g, &h) {
            return Err(Error::precondition(format!("graph contains an induced {name}"), Some(w.to_string())));
        }
    }
    let (_, td) = tree_alpha_within(g, limits)?;
    let alpha = alpha_of_decomposition(g, &td);
    if alpha > 3 {
        return Err(Error::BoundViolated(format!("tree-alpha decomposition has alpha {alpha} above 3")));
    }
    certify(g, td, BoundKind::Theta, 3, tags::THETA3)
}
