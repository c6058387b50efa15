//! The registered properties. Each check looks at one enumerated graph;
//! for the line-graph properties that graph is the root `h` and the
//! property concerns the complement of `L(h)`.

use super::Outcome;
use crate::decomposers::{p3p1_decomposition, star_decomposition, tree_theta_3_decomposition_within};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;
use crate::oracles::{alpha, alpha_in, chi, ibn, omega, tree_alpha_within, tree_theta_within, treewidth_within};
use crate::patterns::{
    contains_obstruction, find_induced, find_subgraph, has_induced_minor_within, is_chordal, is_ok_free, names,
    ClassParams, PatternSpec,
};

fn pattern(name: &str) -> Result<Graph> {
    PatternSpec::named(name)?.to_graph()
}

fn free_of(g: &Graph, list: &[&str]) -> Result<bool> {
    for name in list {
        if find_induced(g, &pattern(name)?).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Held
    } else {
        Outcome::Violated(detail())
    }
}

fn co_line(h: &Graph) -> Result<Graph> {
    Ok(h.line_graph()?.complement())
}

pub(super) fn lemma2_3(g: &Graph, _: &ClassParams, limits: &Limits) -> Result<Outcome> {
    let (ta, _) = tree_alpha_within(g, limits)?;
    let chordal = is_chordal(g);
    Ok(verdict(chordal == (ta <= 1), || format!("chordal={chordal} tree-alpha={ta}")))
}

pub(super) fn cor2_5(h: &Graph, _: &ClassParams, _: &Limits) -> Result<Outcome> {
    let g = co_line(h)?;
    for name in names::LINE_COMPLEMENT_TRIPLE {
        if let Some(w) = find_induced(&g, &pattern(name)?) {
            return Ok(Outcome::Violated(format!("complement of L(h) contains {name} at {w}")));
        }
    }
    Ok(Outcome::Held)
}

pub(super) fn prop3_4(h: &Graph, _: &ClassParams, _: &Limits) -> Result<Outcome> {
    let g = co_line(h)?;
    Ok(verdict(is_ok_free(&g, 2), || "complement of L(h) has two independent cycles".into()))
}

/// Per root `h`: a `2K_{1,s}` subgraph of `h` gives an induced `K_{s,s}` in
/// the complement of `L(h)`; and for the smallest `v` with
/// `Δ(h - v) <= 2s`, the edges of `h - v` form a vertex cover `S` of that
/// complement whose star decomposition has independence number at most
/// `α(S) + 1`, with `α(S) <= 2s` once `2s >= 3` (a triangle in `h - v`
/// gives a clique of three edges).
pub(super) fn thm1_3_implications(h: &Graph, p: &ClassParams, _: &Limits) -> Result<Outcome> {
    let s = p.s;
    let g = co_line(h)?;
    if s >= 1 && find_subgraph(h, &pattern(&names::two_stars(s))?).is_some() {
        let kss = Graph::complete_bipartite(s, s);
        if find_induced(&g, &kss).is_none() {
            return Ok(Outcome::Violated(format!("2K1,{s} subgraph without an induced K{s},{s}")));
        }
    }
    let Some(v) = (0..h.n()).find(|&v| h.delete_vertices(VertexSet::singleton(v)).max_degree() <= 2 * s) else {
        return Ok(Outcome::Held);
    };
    let cover: VertexSet = h
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| a != v && b != v)
        .map(|(i, _)| i)
        .collect();
    if let Some((a, b)) = g.uncovered_edge(cover) {
        return Ok(Outcome::Violated(format!("E(h-{v}) misses edge {a}-{b} of the complement")));
    }
    let a = alpha_in(&g, cover);
    if 2 * s >= 3 && a > 2 * s {
        return Ok(Outcome::Violated(format!("alpha(S) = {a} above 2s = {}", 2 * s)));
    }
    let d = star_decomposition(&g, cover)?;
    let bound = if 2 * s >= 3 { 2 * s + 1 } else { a + 1 };
    Ok(verdict(d.measured <= bound, || format!("star decomposition measures {} above {bound}", d.measured)))
}

/// For `s >= 4`, a `2K_{1,s}`-subgraph-free graph has at most one vertex
/// of degree above `2s`. Smaller `s` is only recorded.
pub(super) fn thm1_3_degree_claim(g: &Graph, p: &ClassParams, _: &Limits) -> Result<Outcome> {
    let s = p.s;
    if s == 0 || find_subgraph(g, &pattern(&names::two_stars(s))?).is_some() {
        return Ok(Outcome::NotApplicable);
    }
    let high: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 2 * s).collect();
    let ok = high.len() <= 1;
    if s >= 4 {
        Ok(verdict(ok, || format!("vertices {high:?} have degree above {}", 2 * s)))
    } else if ok {
        Ok(Outcome::Held)
    } else {
        Ok(Outcome::Observed(format!("s={s}: vertices {high:?} have degree above {}", 2 * s)))
    }
}

pub(super) fn lemma5_1(g: &Graph, _: &ClassParams, limits: &Limits) -> Result<Outcome> {
    let (ta, _) = tree_alpha_within(g, limits)?;
    let b = ibn(g);
    Ok(verdict(ta >= b, || format!("tree-alpha {ta} below ibn {b}")))
}

pub(super) fn thm1_5(g: &Graph, _: &ClassParams, limits: &Limits) -> Result<Outcome> {
    if g.edge_count() == 0 || !free_of(g, &[names::P3_P1])? {
        return Ok(Outcome::NotApplicable);
    }
    let d = p3p1_decomposition(g)?;
    let (ta, _) = tree_alpha_within(g, limits)?;
    let c5_case = free_of(g, &[names::C4])? && !free_of(g, &[names::C5])?;
    let formula = if c5_case { 2 } else { ibn(g) };
    Ok(verdict(d.measured == ta && ta == formula, || {
        format!("construction {} oracle {ta} formula {formula}", d.measured)
    }))
}

pub(super) fn cor5_4(g: &Graph, p: &ClassParams, limits: &Limits) -> Result<Outcome> {
    let t = p.t;
    if !free_of(g, &[names::P3_P1, &names::biclique(t, t)])? {
        return Ok(Outcome::NotApplicable);
    }
    let (ta, _) = tree_alpha_within(g, limits)?;
    Ok(verdict(ta <= t, || format!("tree-alpha {ta} above t = {t}")))
}

/// `α(join(G1, G2)) = max(α(G1), α(G2))`, checked on the join of `g` with
/// its complement and, when the complement of `g` is disconnected, on the
/// split of `g` along its first complement component.
pub(super) fn obs5_3(g: &Graph, _: &ClassParams, _: &Limits) -> Result<Outcome> {
    let co = g.complement();
    let j = g.join(&co)?;
    let (a, b) = (alpha(g), alpha(&co));
    if alpha(&j) != a.max(b) {
        return Ok(Outcome::Violated(format!("join with complement: alpha {} vs max({a},{b})", alpha(&j))));
    }
    let parts = co.components();
    if parts.len() > 1 {
        let first = parts[0];
        let (a1, a2) = (alpha_in(g, first), alpha_in(g, g.vertices() - first));
        if alpha(g) != a1.max(a2) {
            return Ok(Outcome::Violated(format!("split at {first}: alpha {} vs max({a1},{a2})", alpha(g))));
        }
    }
    Ok(Outcome::Held)
}

pub(super) fn lemma6_1_equivalence(g: &Graph, _: &ClassParams, limits: &Limits) -> Result<Outcome> {
    let obstruction = contains_obstruction(g)?;
    let minor = has_induced_minor_within(g, &pattern(names::K23)?, limits)?;
    Ok(verdict(obstruction.is_some() == minor.is_some(), || {
        format!(
            "obstruction {} but induced minor {}",
            obstruction.map_or("absent".to_string(), |(s, r)| format!("{} at {s}", r.kind.name())),
            if minor.is_some() { "present" } else { "absent" }
        )
    }))
}

pub(super) fn cor6_3(g: &Graph, _: &ClassParams, limits: &Limits) -> Result<Outcome> {
    if !free_of(g, &names::P4P1_C4)? {
        return Ok(Outcome::NotApplicable);
    }
    let minor = has_induced_minor_within(g, &pattern(names::K23)?, limits)?;
    Ok(verdict(minor.is_none(), || format!("K2,3 induced minor with branch sets {:?}", minor.unwrap_or_default())))
}

pub(super) fn prop6_4(g: &Graph, _: &ClassParams, limits: &Limits) -> Result<Outcome> {
    if has_induced_minor_within(g, &pattern(names::K23)?, limits)?.is_some() {
        return Ok(Outcome::NotApplicable);
    }
    let (ta, _) = tree_alpha_within(g, limits)?;
    Ok(verdict(ta <= 3, || format!("tree-alpha {ta} above 3")))
}

pub(super) fn thm1_6(g: &Graph, _: &ClassParams, limits: &Limits) -> Result<Outcome> {
    if !free_of(g, &names::P4P1_C4)? {
        return Ok(Outcome::NotApplicable);
    }
    let (ta, _) = tree_alpha_within(g, limits)?;
    let (tt, _) = tree_theta_within(g, limits)?;
    let built = tree_theta_3_decomposition_within(g, limits)?;
    Ok(verdict(ta <= 3 && tt <= 3 && built.measured <= 3, || {
        format!("tree-alpha {ta} tree-theta {tt} constructed {}", built.measured)
    }))
}

pub(super) fn lemma6_6(g: &Graph, _: &ClassParams, _: &Limits) -> Result<Outcome> {
    if !free_of(g, &names::TWO_K2_GEM)? {
        return Ok(Outcome::NotApplicable);
    }
    let (c, w) = (chi(g), omega(g));
    Ok(verdict(c <= w.max(3), || format!("chi {c} above max(omega {w}, 3)")))
}

pub(super) fn prop4_4_inequality(g: &Graph, _: &ClassParams, limits: &Limits) -> Result<Outcome> {
    if g.n() == 0 || !g.is_bipartite() {
        return Ok(Outcome::NotApplicable);
    }
    let (tw, _) = treewidth_within(g, limits)?;
    let (ta, _) = tree_alpha_within(g, limits)?;
    Ok(verdict(tw < 2 * ta, || format!("tw {tw} above 2*{ta}-1")))
}
