//! Non-isomorphic graphs by vertex augmentation: every graph on `n`
//! vertices is a graph on `n - 1` vertices plus one vertex, so extending
//! each representative of the previous order by every neighbourhood and
//! keeping the first copy of each canonical form reaches every class once.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::error::Result;
use crate::graph::{canonical_form, CanonicalForm, Graph, VertexSet};
use crate::io::graph6;
use crate::limits::{check_cap, Limits};
use crate::patterns::ClassFilter;

const CACHED_ORDERS: usize = 8;

static LEVELS: [OnceLock<Vec<Graph>>; CACHED_ORDERS] = [const { OnceLock::new() }; CACHED_ORDERS];

/// Canonical representatives of order `n < 8`, memoised.
fn level(n: usize) -> &'static [Graph] {
    LEVELS[n].get_or_init(|| {
        if n == 0 {
            vec![Graph::new(0)]
        } else {
            Augment::new(level(n - 1), n).collect()
        }
    })
}

struct Augment<'a> {
    parents: &'a [Graph],
    n: usize,
    parent: usize,
    mask: u64,
    seen: HashSet<CanonicalForm>,
}

impl<'a> Augment<'a> {
    fn new(parents: &'a [Graph], n: usize) -> Self {
        Augment { parents, n, parent: 0, mask: 0, seen: HashSet::new() }
    }
}

impl Iterator for Augment<'_> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let last = self.n - 1;
        while self.parent < self.parents.len() {
            if self.mask >> last != 0 {
                self.parent += 1;
                self.mask = 0;
                continue;
            }
            let mask = self.mask;
            self.mask += 1;
            let p = &self.parents[self.parent];
            let mut g = Graph::new(self.n);
            for (u, v) in p.edges() {
                g.add_edge(u, v);
            }
            for u in VertexSet::from_bits(mask) {
                g.add_edge(u, last);
            }
            let form = canonical_form(&g).expect("within canonical cap");
            if self.seen.insert(form.clone()) {
                return Some(graph6::decode(form.as_str()).expect("canonical form is graph6"));
            }
        }
        None
    }
}

enum Source {
    Cached(std::slice::Iter<'static, Graph>),
    Fresh(Augment<'static>),
}

/// Lazy stream of canonical representatives of one order, optionally
/// restricted to a class. Order is deterministic: by parent, then by the
/// new vertex's neighbourhood as a bitmask.
pub struct EnumerationStream {
    pub n: usize,
    filter: Option<ClassFilter>,
    limits: Limits,
    source: Source,
    error: bool,
}

impl Iterator for EnumerationStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        if self.error {
            return None;
        }
        loop {
            let g = match &mut self.source {
                Source::Cached(it) => it.next()?.clone(),
                Source::Fresh(it) => it.next()?,
            };
            match &self.filter {
                None => return Some(Ok(g)),
                Some(f) => match f.matches_within(&g, &self.limits) {
                    Ok(true) => return Some(Ok(g)),
                    Ok(false) => continue,
                    Err(e) => {
                        self.error = true;
                        return Some(Err(e));
                    }
                },
            }
        }
    }
}

pub fn enumerate_graphs(n: usize, filter: Option<ClassFilter>) -> Result<EnumerationStream> {
    enumerate_graphs_within(n, filter, &Limits::default())
}

pub fn enumerate_graphs_within(n: usize, filter: Option<ClassFilter>, limits: &Limits) -> Result<EnumerationStream> {
    check_cap("enumeration", n, limits.enumeration)?;
    let source = if n < CACHED_ORDERS {
        Source::Cached(level(n).iter())
    } else {
        // Orders above the cache are only reachable one step up.
        check_cap("enumeration", n, CACHED_ORDERS)?;
        Source::Fresh(Augment::new(level(n - 1), n))
    };
    Ok(EnumerationStream { n, filter, limits: *limits, source, error: false })
}

/// Every representative of order `0..=n_max`, by increasing order.
pub fn enumerate_up_to(n_max: usize, filter: Option<ClassFilter>, limits: &Limits) -> Result<Vec<Graph>> {
    check_cap("enumeration", n_max, limits.enumeration)?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        for g in enumerate_graphs_within(n, filter.clone(), limits)? {
            out.push(g?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::is_chordal;

    #[test]
    fn counts_match_the_known_sequence() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n, None).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn filter_agrees_with_predicate() {
        let all: Vec<Graph> = enumerate_graphs(5, None).unwrap().map(|g| g.unwrap()).collect();
        let chordal = enumerate_graphs(5, Some("chordal".parse().unwrap())).unwrap().count();
        assert_eq!(chordal, all.iter().filter(|g| is_chordal(g)).count());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(enumerate_graphs(9, None).is_err());
        let big = Limits { enumeration: 10, ..Limits::default() };
        assert!(enumerate_graphs_within(9, None, &big).is_err());
    }

    #[test]
    fn outputs_are_canonical() {
        for g in enumerate_graphs(4, None).unwrap() {
            let g = g.unwrap();
            assert_eq!(graph6::encode(&g), canonical_form(&g).unwrap().as_str());
        }
    }
}
