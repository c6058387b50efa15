//! Class filters: conjunctions of class predicates, e.g.
//! `K1,3-free & O2-free` or `{P4+P1,C4}-free & !chordal`.
//!
//! ```text
//! filter    := term ('&' term)*
//! term      := ['!'] predicate
//! predicate := chordal | bipartite | connected | forest | triangle-free
//!            | complete-multipartite | has-edge | 'O'k'-free'
//!            | patterns '-free' | pattern '-subgraph-free'
//!            | pattern '-induced-minor-free'
//! patterns  := pattern | '{' pattern (',' pattern)* '}'
//! ```

use std::fmt;
use std::str::FromStr;

use super::classes::{is_chordal, is_complete_multipartite, is_triangle_free};
use super::cycles::is_ok_free;
use super::minor::has_induced_minor_within;
use super::search::{find_induced, find_subgraph};
use super::spec::{format_pattern_list, parse_pattern_list, PatternSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    Chordal,
    Bipartite,
    Connected,
    Forest,
    TriangleFree,
    CompleteMultipartite,
    HasEdge,
    OkFree(usize),
    InducedFree(Vec<PatternSpec>),
    SubgraphFree(PatternSpec),
    InducedMinorFree(PatternSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub negated: bool,
    pub predicate: Predicate,
    graphs: Vec<Graph>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFilter {
    pub terms: Vec<Term>,
}

impl ClassFilter {
    pub fn matches(&self, g: &Graph) -> Result<bool> {
        self.matches_within(g, &Limits::default())
    }

    pub fn matches_within(&self, g: &Graph, limits: &Limits) -> Result<bool> {
        for term in &self.terms {
            if term.holds(g, limits)? == term.negated {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Term {
    fn holds(&self, g: &Graph, limits: &Limits) -> Result<bool> {
        Ok(match &self.predicate {
            Predicate::Chordal => is_chordal(g),
            Predicate::Bipartite => g.is_bipartite(),
            Predicate::Connected => g.is_connected(),
            Predicate::Forest => g.is_forest(),
            Predicate::TriangleFree => is_triangle_free(g),
            Predicate::CompleteMultipartite => is_complete_multipartite(g),
            Predicate::HasEdge => g.edge_count() > 0,
            Predicate::OkFree(k) => is_ok_free(g, *k),
            Predicate::InducedFree(_) => self.graphs.iter().all(|h| find_induced(g, h).is_none()),
            Predicate::SubgraphFree(_) => find_subgraph(g, &self.graphs[0]).is_none(),
            Predicate::InducedMinorFree(_) => has_induced_minor_within(g, &self.graphs[0], limits)?.is_none(),
        })
    }
}

impl FromStr for ClassFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = s.split('&').map(|t| parse_term(t.trim())).collect::<Result<Vec<_>>>()?;
        Ok(ClassFilter { terms })
    }
}

fn parse_term(text: &str) -> Result<Term> {
    let bad = |why: String| Error::parse(1, format!("filter term `{text}`: {why}"));
    let (negated, body) = match text.strip_prefix('!') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, text),
    };
    if body.is_empty() {
        return Err(bad("empty term".into()));
    }
    let simple = match body {
        "chordal" => Some(Predicate::Chordal),
        "bipartite" => Some(Predicate::Bipartite),
        "connected" => Some(Predicate::Connected),
        "forest" => Some(Predicate::Forest),
        "triangle-free" => Some(Predicate::TriangleFree),
        "complete-multipartite" => Some(Predicate::CompleteMultipartite),
        "has-edge" => Some(Predicate::HasEdge),
        _ => None,
    };
    let single = |p: &str| -> Result<PatternSpec> { p.parse().map_err(|e: Error| bad(e.to_string())) };
    let predicate = if let Some(p) = simple {
        p
    } else if let Some(p) = body.strip_suffix("-induced-minor-free") {
        Predicate::InducedMinorFree(single(p)?)
    } else if let Some(p) = body.strip_suffix("-subgraph-free") {
        Predicate::SubgraphFree(single(p)?)
    } else if let Some(p) = body.strip_suffix("-free") {
        match p.strip_prefix('O').map(str::parse::<usize>) {
            Some(Ok(k)) if k >= 1 => Predicate::OkFree(k),
            Some(_) => return Err(bad("O<k> needs k >= 1".into())),
            None => Predicate::InducedFree(parse_pattern_list(p).map_err(|e| bad(e.to_string()))?),
        }
    } else {
        return Err(bad("unknown predicate".into()));
    };
    let graphs = match &predicate {
        Predicate::InducedFree(list) => list.iter().map(|p| p.to_graph()).collect::<Result<_>>()?,
        Predicate::SubgraphFree(p) | Predicate::InducedMinorFree(p) => vec![p.to_graph()?],
        _ => Vec::new(),
    };
    Ok(Term { negated, predicate, graphs })
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Chordal => f.write_str("chordal"),
            Predicate::Bipartite => f.write_str("bipartite"),
            Predicate::Connected => f.write_str("connected"),
            Predicate::Forest => f.write_str("forest"),
            Predicate::TriangleFree => f.write_str("triangle-free"),
            Predicate::CompleteMultipartite => f.write_str("complete-multipartite"),
            Predicate::HasEdge => f.write_str("has-edge"),
            Predicate::OkFree(k) => write!(f, "O{k}-free"),
            Predicate::InducedFree(list) => write!(f, "{}-free", format_pattern_list(list)),
            Predicate::SubgraphFree(p) => write!(f, "{p}-subgraph-free"),
            Predicate::InducedMinorFree(p) => write!(f, "{p}-induced-minor-free"),
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            if t.negated {
                f.write_str("!")?;
            }
            write!(f, "{}", t.predicate)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn filter(s: &str) -> ClassFilter {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_evaluates() {
        let f = filter("K1,3-free & O2-free");
        assert!(f.matches(&Graph::cycle(7)).unwrap());
        assert!(!f.matches(&Graph::star(3)).unwrap());
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        assert!(!f.matches(&two_triangles).unwrap());
        assert!(filter("chordal").matches(&Graph::complete(3)).unwrap());
        assert!(filter("!chordal").matches(&Graph::cycle(4)).unwrap());
        assert!(filter("{P4+P1,C4}-free").matches(&Graph::cycle(5)).unwrap());
        assert!(!filter("{P4+P1,C4}-free").matches(&Graph::cycle(4)).unwrap());
        assert!(filter("2K1,2-subgraph-free").matches(&Graph::star(5)).unwrap());
        assert!(!filter("K2,3-induced-minor-free").matches(&Graph::complete_bipartite(2, 3)).unwrap());
        assert!(filter("K5-e-free").matches(&Graph::complete(5)).unwrap());
    }

    #[test]
    fn display_round_trips() {
        for s in ["K1,3-free & O2-free", "!chordal & has-edge", "{P4+P1,C4}-free", "2K1,4-subgraph-free", "K2,3-induced-minor-free"] {
            assert_eq!(filter(s).to_string(), s);
        }
    }

    #[test]
    fn rejects_unknown() {
        for s in ["", "chordall", "O0-free", "Ox-free", "!", "K3-free & ", "Q-free", "-free"] {
            assert!(s.parse::<ClassFilter>().is_err(), "{s}");
        }
    }
}
