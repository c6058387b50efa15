//! Exhaustive checks of the registered properties over every graph (up to
//! isomorphism) with at most `n_max` vertices, and the observational
//! probes.

mod checks;
mod probe;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::enumerate_up_to;
use crate::graph::Graph;
use crate::io::graph6;
use crate::limits::Limits;
use crate::patterns::{ClassFilter, ClassParams};

pub use probe::{run_probe, ProbeReport, PROBES};

/// Environment variable holding the sweep worker count.
pub const WORKERS_ENV: &str = "TREEALPHA_WORKERS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// The hypothesis of the property does not apply to this graph.
    NotApplicable,
    Held,
    Violated(String),
    /// Recorded without being asserted.
    Observed(String),
}

type Check = fn(&Graph, &ClassParams, &Limits) -> Result<Outcome>;

pub struct Assertion {
    pub name: &'static str,
    pub about: &'static str,
    check: Check,
}

impl Assertion {
    pub fn check(&self, g: &Graph, params: &ClassParams, limits: &Limits) -> Result<Outcome> {
        (self.check)(g, params, limits)
    }
}

pub static ASSERTIONS: &[Assertion] = &[
    Assertion { name: "lemma2.3", about: "chordal iff tree-alpha <= 1", check: checks::lemma2_3 },
    Assertion {
        name: "cor2.5",
        about: "complement of L(h) is {K3+K1, K2+3K1, C4+2K1}-free",
        check: checks::cor2_5,
    },
    Assertion { name: "prop3.4", about: "complement of L(h) is O2-free", check: checks::prop3_4 },
    Assertion {
        name: "thm1.3-implications",
        about: "2K1,s subgraph gives induced Ks,s; star decomposition over E(h-v) has alpha <= 2s+1",
        check: checks::thm1_3_implications,
    },
    Assertion { name: "lemma5.1", about: "tree-alpha >= ibn", check: checks::lemma5_1 },
    Assertion {
        name: "thm1.5",
        about: "(P3+P1)-free with an edge: construction = oracle = ibn, or 2 when C4-free with an induced C5",
        check: checks::thm1_5,
    },
    Assertion { name: "cor5.4", about: "{P3+P1, Kt,t}-free implies tree-alpha <= t", check: checks::cor5_4 },
    Assertion {
        name: "lemma6.1-equivalence",
        about: "K2,3 induced minor iff long prism, pyramid, theta or broken wheel induced",
        check: checks::lemma6_1_equivalence,
    },
    Assertion { name: "cor6.3", about: "{P4+P1, C4}-free implies K2,3-induced-minor-free", check: checks::cor6_3 },
    Assertion { name: "prop6.4", about: "K2,3-induced-minor-free implies tree-alpha <= 3", check: checks::prop6_4 },
    Assertion {
        name: "thm1.6",
        about: "{P4+P1, C4}-free implies tree-alpha <= 3 and tree-theta <= 3",
        check: checks::thm1_6,
    },
    Assertion { name: "lemma6.6", about: "{2K2, gem}-free implies chi <= max(omega, 3)", check: checks::lemma6_6 },
    Assertion { name: "obs5.3", about: "alpha of a join is the larger alpha", check: checks::obs5_3 },
    Assertion {
        name: "prop4.4-inequality",
        about: "bipartite implies tw <= 2 tree-alpha - 1",
        check: checks::prop4_4_inequality,
    },
    Assertion {
        name: "thm1.3-degree-claim",
        about: "2K1,s-subgraph-free implies at most one vertex of degree > 2s (asserted for s >= 4)",
        check: checks::thm1_3_degree_claim,
    },
];

pub fn find_assertion(name: &str) -> Result<&'static Assertion> {
    ASSERTIONS.iter().find(|a| a.name == name).ok_or_else(|| Error::UnknownName(name.to_string()))
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub assertion: String,
    pub n_max: usize,
    pub filter: Option<ClassFilter>,
    pub params: ClassParams,
    pub limits: Limits,
}

impl SweepSpec {
    pub fn new(assertion: &str, n_max: usize) -> Self {
        SweepSpec {
            assertion: assertion.to_string(),
            n_max,
            filter: None,
            params: ClassParams::default(),
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub assertion: String,
    pub n_max: usize,
    pub filter: Option<String>,
    pub t: usize,
    pub k: usize,
    pub s: usize,
    pub graphs_checked: usize,
    pub applicable: usize,
    pub held: usize,
    pub violations: Vec<Finding>,
    pub observations: Vec<Finding>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// `key=value` lines; `elapsed` is included only when `timestamp` is set.
    pub fn to_text(&self, timestamp: bool) -> String {
        let mut out = format!(
            "assertion={}\nn_max={}\nfilter={}\nt={}\nk={}\ns={}\ngraphs_checked={}\napplicable={}\nheld={}\nviolations={}\nobservations={}\n",
            self.assertion,
            self.n_max,
            self.filter.as_deref().unwrap_or("none"),
            self.t,
            self.k,
            self.s,
            self.graphs_checked,
            self.applicable,
            self.held,
            self.violations.len(),
            self.observations.len(),
        );
        for f in &self.violations {
            out.push_str(&format!("violation {} {}\n", f.graph6, f.detail));
        }
        for f in &self.observations {
            out.push_str(&format!("observation {} {}\n", f.graph6, f.detail));
        }
        if timestamp {
            out.push_str(&format!("elapsed_ms={}\n", self.elapsed.as_millis()));
        }
        out
    }
}

/// Worker count from [`WORKERS_ENV`]; unset or unparsable means rayon's default.
pub fn workers_from_env() -> Option<usize> {
    std::env::var(WORKERS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Runs `f` on a pool sized by [`WORKERS_ENV`].
pub(crate) fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers_from_env() {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    Ok(pool.install(f))
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepReport> {
    let start = Instant::now();
    spec.limits.validate()?;
    let assertion = find_assertion(&spec.assertion)?;
    let graphs = enumerate_up_to(spec.n_max, None, &spec.limits)?;
    let outcomes: Vec<Result<Option<Outcome>>> = with_pool(|| {
        graphs
            .par_iter()
            .map(|g| {
                if let Some(f) = &spec.filter {
                    if !f.matches_within(g, &spec.limits)? {
                        return Ok(None);
                    }
                }
                assertion.check(g, &spec.params, &spec.limits).map(Some)
            })
            .collect()
    })?;
    let mut report = SweepReport {
        assertion: assertion.name.to_string(),
        n_max: spec.n_max,
        filter: spec.filter.as_ref().map(|f| f.to_string()),
        t: spec.params.t,
        k: spec.params.k,
        s: spec.params.s,
        graphs_checked: 0,
        applicable: 0,
        held: 0,
        violations: Vec::new(),
        observations: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for (g, outcome) in graphs.iter().zip(outcomes) {
        let Some(outcome) = outcome? else { continue };
        report.graphs_checked += 1;
        // Enumerated graphs are canonical, so graph6 sorts by canonical form.
        let finding = |detail: String| Finding { graph6: graph6::encode(g), detail };
        match outcome {
            Outcome::NotApplicable => {}
            Outcome::Held => {
                report.applicable += 1;
                report.held += 1;
            }
            Outcome::Violated(d) => {
                report.applicable += 1;
                report.violations.push(finding(d));
            }
            Outcome::Observed(d) => {
                report.applicable += 1;
                report.observations.push(finding(d));
            }
        }
    }
    report.violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    report.observations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    report.elapsed = start.elapsed();
    Ok(report)
}
