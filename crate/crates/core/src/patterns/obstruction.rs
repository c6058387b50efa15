//! Recognition of thetas, prisms, pyramids and wheels, and the search for
//! the four induced structures that characterise `K_{2,3}` induced minors.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::limits::{check_cap, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ObstructionKind {
    Theta,
    LongPrism,
    /// A prism whose three paths all have length 1.
    ShortPrism,
    BrokenWheel,
    /// A wheel with at most one sector of length at least 2.
    Wheel,
    Pyramid,
}

impl ObstructionKind {
    /// Whether this is one of the four structures in the `K_{2,3}`
    /// induced-minor characterisation.
    pub fn forces_k23_minor(self) -> bool {
        matches!(self, Self::Theta | Self::LongPrism | Self::BrokenWheel | Self::Pyramid)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Theta => "theta",
            Self::LongPrism => "long-prism",
            Self::ShortPrism => "prism",
            Self::BrokenWheel => "broken-wheel",
            Self::Wheel => "wheel",
            Self::Pyramid => "pyramid",
        }
    }
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Role assignment for a recognised structure. Paths are vertex sequences;
/// lengths count edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Roles {
    /// Three paths from `a` to `b`.
    Theta { a: usize, b: usize, paths: Vec<Vec<usize>> },
    /// Path `i` runs from `a_i` (first triangle) to `b_i` (second triangle).
    Prism { paths: Vec<Vec<usize>> },
    /// Three paths from the apex to the triangle.
    Pyramid { apex: usize, paths: Vec<Vec<usize>> },
    /// The rim in cyclic order starting at a neighbour of the centre, and
    /// the sector lengths in that order.
    Wheel { center: usize, rim: Vec<usize>, sectors: Vec<usize> },
}

impl Roles {
    pub fn path_lengths(&self) -> Vec<usize> {
        match self {
            Roles::Theta { paths, .. } | Roles::Prism { paths } | Roles::Pyramid { paths, .. } => {
                paths.iter().map(|p| p.len() - 1).collect()
            }
            Roles::Wheel { sectors, .. } => sectors.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub kind: ObstructionKind,
    pub roles: Roles,
    /// Every reading of the graph, primary first.
    pub matches: Vec<(ObstructionKind, Roles)>,
    pub diagnostics: Vec<String>,
}

/// Decides whether `g` itself is a theta, prism, pyramid or wheel.
///
/// Some small graphs admit two readings (a wheel with sectors `2, 2, 1` is
/// also a pyramid); all readings are listed and the primary one is the first
/// in the order theta, long prism, broken wheel, pyramid, prism, wheel.
pub fn recognize_obstruction(g: &Graph) -> Option<Recognition> {
    let mut matches = Vec::new();
    let mut diagnostics = Vec::new();
    if let Some(r) = as_theta(g) {
        matches.push((ObstructionKind::Theta, r));
    }
    let prism = as_prism(g);
    if let Some((true, r)) = &prism {
        matches.push((ObstructionKind::LongPrism, r.clone()));
    }
    let wheels = as_wheels(g);
    for (broken, r) in &wheels {
        if *broken {
            matches.push((ObstructionKind::BrokenWheel, r.clone()));
        }
    }
    if let Some(r) = as_pyramid(g) {
        matches.push((ObstructionKind::Pyramid, r));
    }
    if let Some((false, r)) = prism {
        matches.push((ObstructionKind::ShortPrism, r));
    }
    for (broken, r) in wheels {
        if !broken {
            if let Roles::Wheel { rim, sectors, .. } = &r {
                if rim.len() == 4 && sectors.len() == 3 {
                    diagnostics.push("4-hole rim with three spokes: a wheel by the letter of the definition".to_string());
                }
            }
            matches.push((ObstructionKind::Wheel, r));
        }
    }
    if matches.len() > 1 {
        let kinds: Vec<&str> = matches.iter().map(|(k, _)| k.name()).collect();
        diagnostics.push(format!("multiple readings: {}", kinds.join(", ")));
    }
    let (kind, roles) = matches.first().cloned()?;
    Some(Recognition { kind, roles, matches, diagnostics })
}

fn degrees(g: &Graph) -> Vec<usize> {
    (0..g.n()).map(|v| g.degree(v)).collect()
}

/// Walks from `start` through `first` along degree-2 vertices until a vertex
/// of `ends` is reached.
fn walk(g: &Graph, start: usize, first: usize, ends: VertexSet) -> Option<Vec<usize>> {
    let mut path = vec![start, first];
    let (mut prev, mut cur) = (start, first);
    while !ends.contains(cur) {
        if g.degree(cur) != 2 || path.len() > g.n() {
            return None;
        }
        let next = g.neighbors(cur).without(prev).first()?;
        path.push(next);
        prev = cur;
        cur = next;
    }
    Some(path)
}

fn as_theta(g: &Graph) -> Option<Roles> {
    let deg = degrees(g);
    let big: Vec<usize> = (0..g.n()).filter(|&v| deg[v] != 2).collect();
    let [a, b] = big[..] else { return None };
    if deg[a] != 3 || deg[b] != 3 || g.has_edge(a, b) || !g.is_connected() {
        return None;
    }
    let ends = VertexSet::singleton(b);
    let paths: Vec<Vec<usize>> = g.neighbors(a).iter().map(|x| walk(g, a, x, ends)).collect::<Option<_>>()?;
    let covered: usize = paths.iter().map(|p| p.len() - 2).sum::<usize>() + 2;
    (covered == g.n()).then_some(Roles::Theta { a, b, paths })
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for w in g.neighbors(u) & g.neighbors(v) {
            if w > v {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// `(long, roles)` when `g` is a prism.
fn as_prism(g: &Graph) -> Option<(bool, Roles)> {
    let deg = degrees(g);
    let tri = triangles(g);
    let [ta, tb] = tri[..] else { return None };
    let set_a: VertexSet = ta.iter().copied().collect();
    let set_b: VertexSet = tb.iter().copied().collect();
    if set_a.intersects(set_b) || g.edge_count() != g.n() + 3 || !g.is_connected() {
        return None;
    }
    if (0..g.n()).any(|v| deg[v] != if (set_a | set_b).contains(v) { 3 } else { 2 }) {
        return None;
    }
    let mut paths = Vec::new();
    let mut reached = VertexSet::EMPTY;
    for a in ta {
        let out = (g.neighbors(a) - set_a).first()?;
        let p = walk(g, a, out, set_b)?;
        reached.insert(*p.last().expect("nonempty"));
        paths.push(p);
    }
    let covered: usize = paths.iter().map(|p| p.len()).sum();
    if reached != set_b || covered != g.n() {
        return None;
    }
    let long = paths.iter().any(|p| p.len() > 2);
    Some((long, Roles::Prism { paths }))
}

fn as_pyramid(g: &Graph) -> Option<Roles> {
    let deg = degrees(g);
    let tri = triangles(g);
    let [t] = tri[..] else { return None };
    let set_b: VertexSet = t.iter().copied().collect();
    if g.edge_count() != g.n() + 2 || !g.is_connected() {
        return None;
    }
    let apexes: Vec<usize> = (0..g.n()).filter(|&v| !set_b.contains(v) && deg[v] != 2).collect();
    let [apex] = apexes[..] else { return None };
    if deg[apex] != 3 || t.iter().any(|&b| deg[b] != 3) {
        return None;
    }
    let mut paths = Vec::new();
    let mut reached = VertexSet::EMPTY;
    for x in g.neighbors(apex) {
        let p = walk(g, apex, x, set_b)?;
        reached.insert(*p.last().expect("nonempty"));
        paths.push(p);
    }
    let covered: usize = paths.iter().map(|p| p.len() - 1).sum::<usize>() + 1;
    let long = paths.iter().filter(|p| p.len() >= 3).count();
    (reached == set_b && covered == g.n() && long >= 2).then_some(Roles::Pyramid { apex, paths })
}

/// Every centre `x` for which `g - x` is a hole and `x` has at least three
/// neighbours on it, with whether the wheel is broken.
fn as_wheels(g: &Graph) -> Vec<(bool, Roles)> {
    let mut out = Vec::new();
    if g.n() < 5 {
        return out;
    }
    for x in g.vertices() {
        let rim_set = g.vertices().without(x);
        if g.degree(x) < 3 || rim_set.iter().any(|v| (g.neighbors(v) & rim_set).len() != 2) {
            continue;
        }
        if !g.is_connected_set(rim_set) {
            continue;
        }
        // Rim in cyclic order, starting at the smallest neighbour of x.
        let start = g.neighbors(x).first().expect("degree >= 3");
        let mut rim = vec![start];
        let mut prev = start;
        let mut cur = (g.neighbors(start) & rim_set).first().expect("degree 2 on rim");
        while cur != start {
            rim.push(cur);
            let next = (g.neighbors(cur) & rim_set).without(prev).first().expect("degree 2 on rim");
            prev = cur;
            cur = next;
        }
        let spokes: Vec<usize> = (0..rim.len()).filter(|&i| g.has_edge(x, rim[i])).collect();
        let sectors: Vec<usize> = (0..spokes.len())
            .map(|i| {
                let next = if i + 1 < spokes.len() { spokes[i + 1] } else { spokes[0] + rim.len() };
                next - spokes[i]
            })
            .collect();
        let broken = sectors.iter().filter(|&&l| l >= 2).count() >= 2;
        out.push((broken, Roles::Wheel { center: x, rim, sectors }));
    }
    out
}

/// The first induced subgraph (by size, then lexicographically) that is a
/// long prism, pyramid, theta or broken wheel.
pub fn contains_obstruction(g: &Graph) -> Result<Option<(VertexSet, Recognition)>> {
    check_cap("obstruction search", g.n(), Limits::ORACLE_CEILING)?;
    let n = g.n();
    for size in 5..=n {
        let mut found = None;
        for_each_subset(n, size, &mut |s| {
            // Every structure is connected, 2-connected even.
            if !g.is_connected_set(s) || s.iter().any(|v| (g.neighbors(v) & s).len() < 2) {
                return false;
            }
            let h = g.induced(s);
            match recognize_obstruction(&h) {
                Some(r) if r.kind.forces_k23_minor() => {
                    found = Some((s, relabel_recognition(r, &s.to_vec())));
                    true
                }
                _ => false,
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn relabel_recognition(r: Recognition, map: &[usize]) -> Recognition {
    let m = |p: &Vec<usize>| p.iter().map(|&v| map[v]).collect::<Vec<_>>();
    let roles = |roles: &Roles| match roles {
        Roles::Theta { a, b, paths } => Roles::Theta { a: map[*a], b: map[*b], paths: paths.iter().map(m).collect() },
        Roles::Prism { paths } => Roles::Prism { paths: paths.iter().map(m).collect() },
        Roles::Pyramid { apex, paths } => Roles::Pyramid { apex: map[*apex], paths: paths.iter().map(m).collect() },
        Roles::Wheel { center, rim, sectors } => {
            Roles::Wheel { center: map[*center], rim: m(rim), sectors: sectors.clone() }
        }
    };
    Recognition {
        kind: r.kind,
        roles: roles(&r.roles),
        matches: r.matches.iter().map(|(k, x)| (*k, roles(x))).collect(),
        diagnostics: r.diagnostics,
    }
}

/// Visits `size`-subsets of `0..n` in lexicographic order until `f` is true.
pub(crate) fn for_each_subset(n: usize, size: usize, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
    fn rec(n: usize, size: usize, from: usize, cur: VertexSet, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        let need = size - cur.len();
        for v in from..=n.saturating_sub(need) {
            if rec(n, size, v + 1, cur.with(v), f) {
                return true;
            }
        }
        false
    }
    if size > n {
        return false;
    }
    rec(n, size, 0, VertexSet::EMPTY, f)
}
