use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::MAX_VERTICES;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Prism,
    Pyramid,
    Theta,
    Wheel,
    GT,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
    CliquePartition,
    CompleteMultipartite,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Prism,
        Family::Pyramid,
        Family::Theta,
        Family::Wheel,
        Family::GT,
        Family::CompleteBipartite,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::CliquePartition,
        Family::CompleteMultipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Prism => "prism",
            Family::Pyramid => "pyramid",
            Family::Theta => "theta",
            Family::Wheel => "wheel",
            Family::GT => "g_t",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::CliquePartition => "clique_partition",
            Family::CompleteMultipartite => "complete_multipartite",
        }
    }

    /// What the integer parameters mean, for usage messages.
    pub fn usage(self) -> &'static str {
        match self {
            Family::Prism => "three path lengths, each >= 1",
            Family::Pyramid => "three path lengths from the apex, each >= 1, at least two >= 2",
            Family::Theta => "three path lengths, each >= 2",
            Family::Wheel => "sector lengths in rim order, at least three, summing to >= 4",
            Family::GT => "t >= 1",
            Family::CompleteBipartite => "two side sizes",
            Family::Path => "number of vertices",
            Family::Cycle => "number of vertices, >= 3",
            Family::Star => "number of leaves",
            Family::CliquePartition => "clique sizes, each >= 1",
            Family::CompleteMultipartite => "part sizes, each >= 1",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::UnknownName(s.trim().to_string()))
    }
}

/// A family with its integer parameters; written `prism(1,1,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParams {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilyParams {
    pub fn new(family: Family, params: &[usize]) -> Self {
        FamilyParams { family, params: params.to_vec() }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
        write!(f, "{}({})", self.family, p.join(","))
    }
}

impl FromStr for FamilyParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = match s.find('(') {
            Some(i) => (&s[..i], s[i + 1..].strip_suffix(')').ok_or_else(|| Error::parse(1, "missing `)`"))?),
            None => (s, ""),
        };
        let family = name.parse()?;
        let params = rest
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(1, format!("bad parameter `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilyParams { family, params })
    }
}

fn bad(p: &FamilyParams, clause: &str) -> Error {
    Error::InvalidParameter(format!("{p}: {clause}"))
}

fn arity(p: &FamilyParams, want: usize) -> Result<()> {
    if p.params.len() != want {
        return Err(bad(p, &format!("expects {want} parameters ({})", p.family.usage())));
    }
    Ok(())
}

/// Builds a member of the family.
///
/// Layouts: prism `a_i = i`, `b_i = 3 + i`; pyramid apex 0 and triangle
/// `1..=3`; theta ends 0 and 1; wheel centre 0 and rim `1..=L` with a spoke
/// at rim vertex 1 and at the end of every sector; `g_t` has `v_i = i`. Path
/// interiors are appended afterwards, path by path.
pub fn make_family(p: &FamilyParams) -> Result<Graph> {
    let x = &p.params;
    let total = |base: usize, extra: usize| -> Result<usize> {
        let n = base.checked_add(extra).filter(|&n| n <= MAX_VERTICES);
        n.ok_or(Error::TooLarge { what: "family", n: base.saturating_add(extra), cap: MAX_VERTICES })
    };
    match p.family {
        Family::Prism => {
            arity(p, 3)?;
            if x.iter().any(|&l| l < 1) {
                return Err(bad(p, "prism paths must have length at least 1"));
            }
            let mut g = Graph::try_new(total(3, x.iter().sum())?)?;
            for (a, b) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
                g.add_edge(a, b);
            }
            let mut next = 6;
            for i in 0..3 {
                add_path(&mut g, i, 3 + i, x[i], &mut next);
            }
            Ok(g)
        }
        Family::Pyramid => {
            arity(p, 3)?;
            if x.iter().any(|&l| l < 1) {
                return Err(bad(p, "pyramid paths must have length at least 1"));
            }
            if x.iter().filter(|&&l| l >= 2).count() < 2 {
                return Err(bad(p, "two pyramid paths must have length at least 2"));
            }
            let mut g = Graph::try_new(total(1, x.iter().sum())?)?;
            for (a, b) in [(1, 2), (2, 3), (1, 3)] {
                g.add_edge(a, b);
            }
            let mut next = 4;
            for i in 0..3 {
                add_path(&mut g, 0, 1 + i, x[i], &mut next);
            }
            Ok(g)
        }
        Family::Theta => {
            arity(p, 3)?;
            if x.iter().any(|&l| l < 2) {
                return Err(bad(p, "theta paths must have length at least 2"));
            }
            let mut g = Graph::try_new(total(0, x.iter().sum::<usize>() - 1)?)?;
            let mut next = 2;
            for &l in x {
                add_path(&mut g, 0, 1, l, &mut next);
            }
            Ok(g)
        }
        Family::Wheel => {
            if x.len() < 3 {
                return Err(bad(p, "a wheel centre needs at least three neighbours on the rim"));
            }
            if x.iter().any(|&l| l < 1) {
                return Err(bad(p, "sectors must have length at least 1"));
            }
            let rim: usize = x.iter().sum();
            if rim < 4 {
                return Err(bad(p, "the rim must be a hole (length at least 4)"));
            }
            let mut g = Graph::try_new(total(1, rim)?)?;
            for i in 0..rim {
                g.add_edge(1 + i, 1 + (i + 1) % rim);
            }
            let mut pos = 0;
            for &l in x {
                g.add_edge(0, 1 + pos);
                pos += l;
            }
            Ok(g)
        }
        Family::GT => {
            arity(p, 1)?;
            let t = x[0];
            if t < 1 {
                return Err(bad(p, "t must be at least 1"));
            }
            let mut g = Graph::try_new(total(t + 1, t)?)?;
            for i in 1..=t {
                for j in i + 1..=t {
                    g.add_edge(i, j);
                }
                g.add_edge(0, t + i);
                g.add_edge(t + i, i);
            }
            Ok(g)
        }
        Family::CompleteBipartite => {
            arity(p, 2)?;
            total(x[0], x[1])?;
            Ok(Graph::complete_bipartite(x[0], x[1]))
        }
        Family::Path => {
            arity(p, 1)?;
            total(x[0], 0)?;
            Ok(Graph::path(x[0]))
        }
        Family::Cycle => {
            arity(p, 1)?;
            if x[0] < 3 {
                return Err(bad(p, "a cycle needs at least 3 vertices"));
            }
            total(x[0], 0)?;
            Ok(Graph::cycle(x[0]))
        }
        Family::Star => {
            arity(p, 1)?;
            total(1, x[0])?;
            Ok(Graph::star(x[0]))
        }
        Family::CliquePartition | Family::CompleteMultipartite => {
            if x.iter().any(|&s| s < 1) {
                return Err(bad(p, "parts must be nonempty"));
            }
            let n = total(0, x.iter().try_fold(0usize, |a, &b| a.checked_add(b)).unwrap_or(usize::MAX))?;
            let mut g = Graph::new(n);
            let mut part = Vec::with_capacity(n);
            for (i, &s) in x.iter().enumerate() {
                part.extend(std::iter::repeat_n(i, s));
            }
            let same = p.family == Family::CliquePartition;
            for u in 0..n {
                for v in u + 1..n {
                    if (part[u] == part[v]) == same {
                        g.add_edge(u, v);
                    }
                }
            }
            Ok(g)
        }
    }
}

/// Joins `from` to `to` by a path with `len` edges, numbering the interior
/// from `*next`.
fn add_path(g: &mut Graph, from: usize, to: usize, len: usize, next: &mut usize) {
    let mut prev = from;
    for _ in 1..len {
        g.add_edge(prev, *next);
        prev = *next;
        *next += 1;
    }
    g.add_edge(prev, to);
}

/// Every long prism, pyramid, theta and broken wheel with at most `max_n`
/// vertices, one parameter list per shape up to the symmetries of each
/// family (sorted path lengths; sector sequences up to rotation and
/// reflection).
pub fn obstruction_families(max_n: usize) -> Vec<FamilyParams> {
    let max_n = max_n.min(MAX_VERTICES);
    let mut out = Vec::new();
    let triples = |lo: usize, hi: usize| {
        let mut v = Vec::new();
        for a in lo..=hi {
            for b in a..=hi {
                for c in b..=hi {
                    v.push([a, b, c]);
                }
            }
        }
        v
    };
    for l in triples(1, max_n) {
        if 3 + l.iter().sum::<usize>() <= max_n && l[2] >= 2 {
            out.push(FamilyParams::new(Family::Prism, &l));
        }
    }
    for l in triples(1, max_n) {
        if l.iter().sum::<usize>() < max_n && l[1] >= 2 {
            out.push(FamilyParams::new(Family::Pyramid, &l));
        }
    }
    for l in triples(2, max_n) {
        if l.iter().sum::<usize>() - 1 <= max_n {
            out.push(FamilyParams::new(Family::Theta, &l));
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![Vec::new()];
    while let Some(s) = stack.pop() {
        let rim: usize = s.iter().sum();
        if s.len() >= 3 && s.iter().filter(|&&l| l >= 2).count() >= 2 {
            let key = dihedral_min(&s);
            if seen.insert(key.clone()) {
                out.push(FamilyParams::new(Family::Wheel, &key));
            }
        }
        for l in 1..=max_n.saturating_sub(1 + rim) {
            let mut t = s.clone();
            t.push(l);
            stack.push(t);
        }
    }
    out.sort();
    out
}

fn dihedral_min(s: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut best = s.to_vec();
    for r in 0..n {
        let rot: Vec<usize> = (0..n).map(|i| s[(i + r) % n]).collect();
        let rev: Vec<usize> = rot.iter().rev().copied().collect();
        best = best.min(rot).min(rev);
    }
    best
}

/// All parameterisations of every family with at most `max_n` vertices,
/// for the CLI's listing; obstruction shapes plus the simple families.
pub fn families_up_to(max_n: usize) -> Vec<FamilyParams> {
    let mut out = obstruction_families(max_n);
    let max_n = max_n.min(MAX_VERTICES);
    for n in 0..=max_n {
        out.push(FamilyParams::new(Family::Path, &[n]));
        if n >= 3 {
            out.push(FamilyParams::new(Family::Cycle, &[n]));
        }
        if n >= 1 {
            out.push(FamilyParams::new(Family::Star, &[n - 1]));
        }
    }
    for t in 1..=max_n {
        if 2 * t < max_n {
            out.push(FamilyParams::new(Family::GT, &[t]));
        }
    }
    for a in 1..=max_n {
        for b in a..=max_n - a {
            out.push(FamilyParams::new(Family::CompleteBipartite, &[a, b]));
        }
    }
    for parts in partitions(max_n) {
        if parts.len() >= 2 {
            out.push(FamilyParams::new(Family::CliquePartition, &parts));
            out.push(FamilyParams::new(Family::CompleteMultipartite, &parts));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Non-increasing integer partitions of every total up to `max_n`.
fn partitions(max_n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_n, max_n, &mut Vec::new(), &mut out);
    out
}
