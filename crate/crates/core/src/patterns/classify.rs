//! Aggregated class membership with witnesses.

use std::fmt;

use serde::Serialize;

use super::classes::{find_hole, find_triangle, is_chordal, is_complete_multipartite};
use super::cycles::find_independent_cycles;
use super::minor::has_induced_minor_within;
use super::obstruction::contains_obstruction;
use super::search::{find_induced, find_subgraph};
use super::spec::{format_pattern_list, names, parse_pattern_list, PatternSpec};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassParams {
    pub t: usize,
    pub k: usize,
    pub s: usize,
}

impl Default for ClassParams {
    fn default() -> Self {
        ClassParams { t: 3, k: 2, s: 2 }
    }
}

/// Certificate attached to a negative answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Vertices inducing the forbidden pattern.
    Vertices(VertexSet),
    /// Cycles in cyclic order (holes, or independent cycles).
    Cycles(Vec<Vec<usize>>),
    /// Branch sets of an induced-minor model, indexed by pattern vertex.
    BranchSets(Vec<VertexSet>),
    /// Image of each pattern vertex under a subgraph embedding.
    Mapping(Vec<usize>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |items: Vec<String>| format!("[{}]", items.join(","));
        let seq = |v: &[usize]| list(v.iter().map(|x| x.to_string()).collect());
        match self {
            Witness::Vertices(s) => write!(f, "{s}"),
            Witness::Cycles(cs) => f.write_str(&list(cs.iter().map(|c| seq(c)).collect())),
            Witness::BranchSets(bs) => f.write_str(&list(bs.iter().map(|b| b.to_string()).collect())),
            Witness::Mapping(m) => f.write_str(&seq(m)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub name: String,
    pub member: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub params: ClassParams,
    pub entries: Vec<ClassEntry>,
}

impl ClassReport {
    pub fn get(&self, name: &str) -> Option<bool> {
        self.entries.iter().find(|e| e.name == name).map(|e| e.member)
    }

    pub fn entry(&self, name: &str) -> Option<&ClassEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// `name=bool` tokens, each negative one followed by `witness=[...]`.
    pub fn to_line(&self) -> String {
        let mut parts = Vec::new();
        for e in &self.entries {
            parts.push(format!("{}={}", e.name, e.member));
            if let Some(w) = &e.witness {
                parts.push(format!("witness={w}"));
            }
        }
        parts.join(" ")
    }
}

/// First pattern of `list` occurring induced, with the lexicographically
/// smallest vertex set.
pub fn find_any_induced(g: &Graph, list: &[(PatternSpec, Graph)]) -> Option<VertexSet> {
    list.iter().find_map(|(_, h)| find_induced(g, h))
}

fn with_graphs(list: Vec<PatternSpec>) -> Result<Vec<(PatternSpec, Graph)>> {
    list.into_iter().map(|p| p.to_graph().map(|h| (p, h))).collect()
}

fn free_entry(g: &Graph, list_text: &str) -> Result<ClassEntry> {
    let list = with_graphs(parse_pattern_list(list_text)?)?;
    let w = find_any_induced(g, &list);
    let specs: Vec<PatternSpec> = list.into_iter().map(|(p, _)| p).collect();
    Ok(ClassEntry {
        name: format!("{}-free", format_pattern_list(&specs)),
        member: w.is_none(),
        witness: w.map(Witness::Vertices),
    })
}

/// `K_{2,3}` induced minors: the branch-set search within its cap, the
/// structural route (long prism, pyramid, theta, broken wheel) above it.
pub fn k23_induced_minor(g: &Graph, limits: &Limits) -> Result<Option<Witness>> {
    if g.n() <= limits.induced_minor {
        let h = Graph::complete_bipartite(2, 3);
        Ok(has_induced_minor_within(g, &h, limits)?.map(Witness::BranchSets))
    } else {
        Ok(contains_obstruction(g)?.map(|(s, _)| Witness::Vertices(s)))
    }
}

pub fn classify(g: &Graph, params: ClassParams) -> Result<ClassReport> {
    classify_within(g, params, &Limits::default())
}

pub fn classify_within(g: &Graph, params: ClassParams, limits: &Limits) -> Result<ClassReport> {
    let ClassParams { t, k, s } = params;
    let mut entries = Vec::new();
    let chordal = is_chordal(g);
    entries.push(ClassEntry {
        name: "chordal".into(),
        member: chordal,
        witness: if chordal { None } else { find_hole(g).map(|c| Witness::Cycles(vec![c])) },
    });
    let triangle = find_triangle(g);
    entries.push(ClassEntry {
        name: "triangle-free".into(),
        member: triangle.is_none(),
        witness: triangle.map(Witness::Vertices),
    });
    let cmp = is_complete_multipartite(g);
    let co_p3 = PatternSpec::named(names::CO_P3)?.to_graph()?;
    entries.push(ClassEntry {
        name: "complete-multipartite".into(),
        member: cmp,
        witness: if cmp { None } else { find_induced(g, &co_p3).map(Witness::Vertices) },
    });
    for list in [
        names::PAW.to_string(),
        names::P3_P1.to_string(),
        names::C4.to_string(),
        format!("{{{}}}", names::P4P1_C4.join(",")),
        names::P5.to_string(),
        names::P6.to_string(),
        names::biclique(t, t),
        names::biclique(1, t),
        format!("{{{}}}", names::TWO_K2_GEM.join(",")),
    ] {
        entries.push(free_entry(g, &list)?);
    }
    let cycles = find_independent_cycles(g, k);
    entries.push(ClassEntry {
        name: format!("O{k}-free"),
        member: cycles.is_none(),
        witness: cycles.map(Witness::Cycles),
    });
    let stars = PatternSpec::named(&names::two_stars(s))?;
    let map = find_subgraph(g, &stars.to_graph()?);
    entries.push(ClassEntry {
        name: format!("{stars}-subgraph-free"),
        member: map.is_none(),
        witness: map.map(Witness::Mapping),
    });
    let minor = k23_induced_minor(g, limits)?;
    entries.push(ClassEntry {
        name: format!("{}-induced-minor-free", names::K23),
        member: minor.is_none(),
        witness: minor,
    });
    entries.push(free_entry(g, &format!("{{{}}}", names::LINE_COMPLEMENT_TRIPLE.join(",")))?);
    Ok(ClassReport { params, entries })
}
