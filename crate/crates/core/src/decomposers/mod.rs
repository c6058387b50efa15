//! Tree decompositions built by explicit constructions, each certified on
//! return: the decomposition is validated, its measure is recomputed with
//! the exact oracles, and the measure must not exceed the bound the
//! construction guarantees.

mod fvs;
mod p3p1;
mod split;
mod star;
mod theta3;

pub use fvs::{fvs_decomposition, fvs_witness, FvsWitness};
pub use p3p1::p3p1_decomposition;
pub use split::{split_decomposition, split_decomposition_within};
pub use star::star_decomposition;
pub use theta3::{tree_theta_3_decomposition, tree_theta_3_decomposition_within};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles::{alpha_of_decomposition, from_elimination_order, theta_of_decomposition, width_of_decomposition, TreeDecomposition};
use crate::patterns::perfect_elimination_order;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Alpha,
    Theta,
    Width,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Alpha => "alpha",
            BoundKind::Theta => "theta",
            BoundKind::Width => "width",
        })
    }
}

/// Provenance tags naming the result each construction comes from. They are
/// part of the command-line output format.
pub mod tags {
    pub const EXACT: &str = "oracle";
    pub const STAR: &str = "thm1.3";
    pub const SPLIT: &str = "thm3.2";
    pub const FVS: &str = "thm1.4";
    pub const P3P1: &str = "thm1.5";
    pub const THETA3: &str = "thm1.6";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundedDecomposition {
    pub td: TreeDecomposition,
    pub kind: BoundKind,
    /// The bound the construction guarantees.
    pub bound_value: usize,
    /// The measure of `td` recomputed by the oracles.
    pub measured: usize,
    pub provenance: &'static str,
}

pub(crate) fn measure(g: &Graph, td: &TreeDecomposition, kind: BoundKind) -> usize {
    match kind {
        BoundKind::Alpha => alpha_of_decomposition(g, td),
        BoundKind::Theta => theta_of_decomposition(g, td),
        BoundKind::Width => width_of_decomposition(td),
    }
}

pub(crate) fn certify(
    g: &Graph,
    td: TreeDecomposition,
    kind: BoundKind,
    bound_value: usize,
    provenance: &'static str,
) -> Result<BoundedDecomposition> {
    td.validate(g)
        .map_err(|v| Error::BoundViolated(format!("{provenance}: construction produced an invalid decomposition: {v}")))?;
    let measured = measure(g, &td, kind);
    if measured > bound_value {
        return Err(Error::BoundViolated(format!(
            "{provenance}: {kind} of the decomposition is {measured}, above the guaranteed {bound_value}"
        )));
    }
    Ok(BoundedDecomposition { td, kind, bound_value, measured, provenance })
}

/// Re-expresses a decomposition of `G[verts]` (vertices numbered by rank in
/// `verts`) over the host graph on `n` vertices.
pub(crate) fn lift(td: &TreeDecomposition, verts: VertexSet, n: usize) -> TreeDecomposition {
    let map = verts.to_vec();
    TreeDecomposition {
        n,
        bags: td.bags.iter().map(|b| b.iter().map(|v| map[v]).collect()).collect(),
        edges: td.edges.clone(),
    }
}

pub(crate) fn add_to_every_bag(td: &mut TreeDecomposition, extra: VertexSet) {
    for b in &mut td.bags {
        *b |= extra;
    }
}

/// Clique tree of a chordal induced subgraph `G[verts]`, over the host.
pub(crate) fn clique_tree(g: &Graph, verts: VertexSet) -> Option<TreeDecomposition> {
    if verts.is_empty() {
        return Some(TreeDecomposition { n: g.n(), bags: vec![VertexSet::EMPTY], edges: Vec::new() });
    }
    let h = g.induced(verts);
    let peo = perfect_elimination_order(&h)?;
    Some(lift(&from_elimination_order(&h, &peo), verts, g.n()))
}
