use super::{add_to_every_bag, certify, clique_tree, tags, BoundKind, BoundedDecomposition};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph, VertexSet};
use crate::oracles::{alpha_in, ibn, TreeDecomposition};
use crate::patterns::{find_induced, names, PatternSpec};

/// Decomposition of a `(P3+P1)`-free graph with at least one edge, with
/// independence number at most `max(ibn(G), 2)`, and 1 when `G` is chordal.
///
/// Work on `G[U]`, starting from `U = V`:
/// * `G[U]` chordal: its clique tree.
/// * complement of `G[U]` connected: being paw-free, the complement is
///   triangle-free (so `alpha(G[U]) <= 2`, one bag) or complete multipartite
///   (so `G[U]` is a union of cliques, chordal).
/// * otherwise `G[U]` is the join of a complement component `A` and the
///   rest. At most one component can have independence number above `s`,
///   or an induced `K_{s+1,s+1}` appears; absorb a component with
///   `alpha <= s` (smallest alpha, then smallest canonical form, then
///   smallest vertex) into every bag and continue with `U - A`.
pub fn p3p1_decomposition(g: &Graph) -> Result<BoundedDecomposition> {
    let pattern = PatternSpec::named(names::P3_P1)?.to_graph()?;
    if let Some(w) = find_induced(g, &pattern) {
        return Err(Error::precondition("graph contains an induced P3+P1", Some(w.to_string())));
    }
    if g.edge_count() == 0 {
        return Err(Error::precondition("graph has no edges; edgeless graphs are chordal, use the exact mode", None));
    }
    let s = ibn(g).max(2);
    if let Some(td) = clique_tree(g, g.vertices()) {
        return certify(g, td, BoundKind::Alpha, 1, tags::P3P1);
    }
    let td = build(g, g.vertices(), s)?;
    certify(g, td, BoundKind::Alpha, s, tags::P3P1)
}

fn build(g: &Graph, u: VertexSet, s: usize) -> Result<TreeDecomposition> {
    if let Some(td) = clique_tree(g, u) {
        return Ok(td);
    }
    let co = g.complement();
    let parts = co.components_in(u);
    if parts.len() == 1 {
        // Not chordal, so the complement is triangle-free: alpha <= 2.
        return Ok(TreeDecomposition { n: g.n(), bags: vec![u], edges: Vec::new() });
    }
    let mut best: Option<(usize, Vec<u8>, usize, VertexSet)> = None;
    for a in parts {
        let alpha = alpha_in(g, a);
        if alpha > s {
            continue;
        }
        let key = (alpha, canonical_form(&g.induced(a))?.as_bytes().to_vec(), a.first().expect("nonempty"), a);
        if best.as_ref().is_none_or(|b| (&key.0, &key.1, key.2) < (&b.0, &b.1, b.2)) {
            best = Some(key);
        }
    }
    let (_, _, _, absorbed) = best.ok_or_else(|| {
        Error::BoundViolated(format!("no complement component of {u} has independence number at most {s}"))
    })?;
    let mut td = build(g, u - absorbed, s)?;
    add_to_every_bag(&mut td, absorbed);
    Ok(td)
}
