use super::{certify, tags, BoundKind, BoundedDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{alpha_in, TreeDecomposition};
use crate::VertexSet;

/// Bags `cover ∪ {t}`, one per vertex `t` outside the vertex cover, on a
/// path in ascending order of `t`. Every edge has an endpoint in the cover,
/// so each bag is the cover plus one vertex and `alpha <= alpha(G[cover]) + 1`.
/// When the cover is everything, the single bag `V` is returned.
pub fn star_decomposition(g: &Graph, cover: VertexSet) -> Result<BoundedDecomposition> {
    g.check_set(cover)?;
    if let Some((u, v)) = g.uncovered_edge(cover) {
        return Err(Error::precondition(
            format!("{cover} is not a vertex cover"),
            Some(format!("uncovered edge {u}-{v}")),
        ));
    }
    let rest = g.vertices() - cover;
    let td = if rest.is_empty() {
        TreeDecomposition::single_bag(g.n())
    } else {
        TreeDecomposition {
            n: g.n(),
            bags: rest.iter().map(|t| cover.with(t)).collect(),
            edges: (1..rest.len()).map(|i| (i - 1, i)).collect(),
        }
    };
    let bound = alpha_in(g, cover) + usize::from(!rest.is_empty());
    certify(g, td, BoundKind::Alpha, bound, tags::STAR)
}
