//! Pattern names, induced and non-induced pattern search, structural class
//! tests, independent cycles, induced minors and class reports.

mod classes;
mod classify;
mod cycles;
mod filter;
mod minor;
mod obstruction;
mod search;
mod spec;

pub use classes::{
    find_hole, find_triangle, is_chordal, is_complete_multipartite, is_paw_free_structured, is_triangle_free,
    multipartite_parts, perfect_elimination_order,
};
pub use classify::{classify, classify_within, k23_induced_minor, ClassEntry, ClassParams, ClassReport, Witness};
pub use cycles::{find_independent_cycles, is_ok_free};
pub use filter::{ClassFilter, Predicate, Term};
pub use minor::{has_induced_minor, has_induced_minor_within};
pub use obstruction::{contains_obstruction, recognize_obstruction, ObstructionKind, Recognition, Roles};
pub use search::{find_induced, find_subgraph};
pub use spec::{format_pattern_list, names, parse_pattern_list, PatternSpec};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Lexicographically smallest vertex set inducing `p`.
pub fn contains_induced(g: &Graph, p: &PatternSpec) -> Result<Option<VertexSet>> {
    Ok(find_induced(g, &p.to_graph()?))
}

/// A copy of `p` as a subgraph, as a map from pattern vertices.
pub fn contains_subgraph(g: &Graph, p: &PatternSpec) -> Result<Option<Vec<usize>>> {
    Ok(find_subgraph(g, &p.to_graph()?))
}
