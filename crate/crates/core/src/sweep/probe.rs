//! Observational searches for two open questions. Nothing here asserts:
//! the reports are data.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::{with_pool, Finding};
use crate::error::{Error, Result};
use crate::generators::enumerate_up_to;
use crate::graph::{Graph, VertexSet};
use crate::io::graph6;
use crate::limits::Limits;
use crate::oracles::{ibn, tree_alpha_within};
use crate::patterns::{is_chordal, ClassFilter};

pub const PROBES: [&str; 2] = ["q7.3-p5-gap", "q7.4-clique-chordal"];

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub probe: String,
    pub n_max: usize,
    pub graphs_examined: usize,
    /// Ordered key/value summary.
    pub summary: Vec<(String, String)>,
    pub findings: Vec<Finding>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ProbeReport {
    pub fn to_text(&self, timestamp: bool) -> String {
        let mut out = format!("probe={}\nn_max={}\ngraphs_examined={}\n", self.probe, self.n_max, self.graphs_examined);
        for (k, v) in &self.summary {
            out.push_str(&format!("{k}={v}\n"));
        }
        for f in &self.findings {
            out.push_str(&format!("finding {} {}\n", f.graph6, f.detail));
        }
        if timestamp {
            out.push_str(&format!("elapsed_ms={}\n", self.elapsed.as_millis()));
        }
        out
    }
}

pub fn run_probe(name: &str, n_max: usize, limits: &Limits) -> Result<ProbeReport> {
    let start = Instant::now();
    let mut report = match name {
        "q7.3-p5-gap" => p5_gap(n_max, limits)?,
        "q7.4-clique-chordal" => clique_chordal(n_max, limits)?,
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

fn class(n_max: usize, filter: &str, limits: &Limits) -> Result<Vec<Graph>> {
    let f: ClassFilter = filter.parse()?;
    enumerate_up_to(n_max, Some(f), limits)
}

/// Largest `tree-alpha - ibn` over P5-free graphs, with the first graph
/// (in enumeration order) attaining each gap value.
fn p5_gap(n_max: usize, limits: &Limits) -> Result<ProbeReport> {
    let graphs = class(n_max, "P5-free", limits)?;
    let gaps: Vec<Result<usize>> = with_pool(|| {
        graphs
            .par_iter()
            .map(|g| Ok(tree_alpha_within(g, limits)?.0.saturating_sub(ibn(g))))
            .collect()
    })?;
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut first: BTreeMap<usize, &Graph> = BTreeMap::new();
    for (g, gap) in graphs.iter().zip(gaps) {
        let gap = gap?;
        *histogram.entry(gap).or_default() += 1;
        first.entry(gap).or_insert(g);
    }
    let max_gap = histogram.keys().next_back().copied().unwrap_or(0);
    let hist: Vec<String> = histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    Ok(ProbeReport {
        probe: "q7.3-p5-gap".into(),
        n_max,
        graphs_examined: graphs.len(),
        summary: vec![("max_gap".into(), max_gap.to_string()), ("gap_histogram".into(), hist.join(","))],
        findings: first
            .into_iter()
            .map(|(gap, g)| Finding { graph6: graph6::encode(g), detail: format!("gap={gap}") })
            .collect(),
        elapsed: Duration::ZERO,
    })
}

/// `{P4+P1, C4}`-free graphs with no clique `K` (the empty set included)
/// such that `G - K` is chordal.
fn clique_chordal(n_max: usize, limits: &Limits) -> Result<ProbeReport> {
    let graphs = class(n_max, "{P4+P1,C4}-free", limits)?;
    let candidates: Vec<bool> = with_pool(|| graphs.par_iter().map(|g| !has_chordal_clique_deletion(g)).collect())?;
    let findings: Vec<Finding> = graphs
        .iter()
        .zip(candidates)
        .filter(|(_, c)| *c)
        .map(|(g, _)| Finding { graph6: graph6::encode(g), detail: "no clique deletion is chordal".into() })
        .collect();
    Ok(ProbeReport {
        probe: "q7.4-clique-chordal".into(),
        n_max,
        graphs_examined: graphs.len(),
        summary: vec![("candidates".into(), findings.len().to_string())],
        findings,
        elapsed: Duration::ZERO,
    })
}

fn has_chordal_clique_deletion(g: &Graph) -> bool {
    let mut found = false;
    cliques(g, VertexSet::EMPTY, g.vertices(), &mut |k| {
        found = is_chordal(&g.delete_vertices(k));
        found
    });
    found
}

/// Visits every clique (the empty one first); stops once `f` returns true.
fn cliques(g: &Graph, current: VertexSet, cand: VertexSet, f: &mut impl FnMut(VertexSet) -> bool) -> bool {
    if f(current) {
        return true;
    }
    let mut rest = cand;
    for v in cand {
        rest.remove(v);
        if cliques(g, current.with(v), rest & g.neighbors(v), f) {
            return true;
        }
    }
    false
}
