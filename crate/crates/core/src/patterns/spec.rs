//! Pattern names.
//!
//! Grammar (whitespace-free):
//!
//! ```text
//! pattern := term ('+' term)*
//! term    := [multiplicity] atom
//! atom    := 'P'k | 'C'k | 'K'n | 'K'n'-e' | 'K'a','b | 'paw' | 'gem' | 'claw'
//!          | 'g6(' graph6 ')'
//! ```
//!
//! So `K3+K1`, `K2+3K1`, `C4+2K1`, `2K2`, `K5-e`, `K2,3` and `2K1,4` (two
//! disjoint stars `K_{1,4}`) are all patterns. A comma after `K<a>` starts a
//! biclique only when the digits after it end the atom; in `{K2,3,C4}` the
//! atoms are `K2,3` and `C4`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::graph6;
use crate::limits::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMinusEdge(usize),
    Biclique(usize, usize),
    Paw,
    Gem,
    Claw,
    /// Disjoint union of `(multiplicity, pattern)` terms, none of them a union.
    Union(Vec<(usize, PatternSpec)>),
    Explicit(Graph),
}

/// Patterns referred to by name throughout the crate and its tests.
pub mod names {
    pub const TRIANGLE: &str = "K3";
    pub const PAW: &str = "paw";
    pub const GEM: &str = "gem";
    pub const CLAW: &str = "claw";
    pub const C4: &str = "C4";
    pub const C5: &str = "C5";
    pub const P3_P1: &str = "P3+P1";
    pub const P4_P1: &str = "P4+P1";
    pub const P5: &str = "P5";
    pub const P6: &str = "P6";
    pub const TWO_K2: &str = "2K2";
    pub const K23: &str = "K2,3";
    /// `K_2 + K_1`, the complement of `P_3`.
    pub const CO_P3: &str = "K2+K1";
    /// The three graphs every complement of a line graph excludes.
    pub const LINE_COMPLEMENT_TRIPLE: [&str; 3] = ["K3+K1", "K2+3K1", "C4+2K1"];
    pub const P4P1_C4: [&str; 2] = [P4_P1, C4];
    pub const TWO_K2_GEM: [&str; 2] = [TWO_K2, GEM];

    pub fn biclique(a: usize, b: usize) -> String {
        format!("K{a},{b}")
    }

    /// `2K_{1,s}`.
    pub fn two_stars(s: usize) -> String {
        format!("2K1,{s}")
    }
}

impl PatternSpec {
    /// Named pattern, e.g. `PatternSpec::named(names::PAW)`.
    pub fn named(name: &str) -> Result<Self> {
        name.parse()
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Ok(match self {
            PatternSpec::Path(k) => Graph::try_new(*k).map(|_| Graph::path(*k))?,
            PatternSpec::Cycle(k) => Graph::try_new(*k).map(|_| Graph::cycle(*k))?,
            PatternSpec::Complete(k) => Graph::try_new(*k).map(|_| Graph::complete(*k))?,
            PatternSpec::CompleteMinusEdge(k) => {
                let mut g = Graph::try_new(*k).map(|_| Graph::complete(*k))?;
                g.remove_edge(0, 1);
                g
            }
            PatternSpec::Biclique(a, b) => {
                Graph::try_new(a + b).map(|_| Graph::complete_bipartite(*a, *b))?
            }
            // Triangle 0-1-2 with pendant 3 on vertex 2.
            PatternSpec::Paw => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)])?,
            // P_4 on 0..4 joined to vertex 4.
            PatternSpec::Gem => Graph::path(4).join(&Graph::new(1))?,
            PatternSpec::Claw => Graph::star(3),
            PatternSpec::Union(terms) => {
                let mut g = Graph::new(0);
                for (mult, p) in terms {
                    let part = p.to_graph()?;
                    for _ in 0..*mult {
                        g = g.disjoint_union(&part)?;
                    }
                }
                g
            }
            PatternSpec::Explicit(g) => g.clone(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            PatternSpec::Path(k) | PatternSpec::Cycle(k) | PatternSpec::Complete(k) => *k,
            PatternSpec::CompleteMinusEdge(k) => *k,
            PatternSpec::Biclique(a, b) => a + b,
            PatternSpec::Paw | PatternSpec::Claw => 4,
            PatternSpec::Gem => 5,
            PatternSpec::Union(terms) => terms.iter().map(|(m, p)| m * p.vertex_count()).sum(),
            PatternSpec::Explicit(g) => g.n(),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Path(k) => write!(f, "P{k}"),
            PatternSpec::Cycle(k) => write!(f, "C{k}"),
            PatternSpec::Complete(k) => write!(f, "K{k}"),
            PatternSpec::CompleteMinusEdge(k) => write!(f, "K{k}-e"),
            PatternSpec::Biclique(a, b) => write!(f, "K{a},{b}"),
            PatternSpec::Paw => f.write_str("paw"),
            PatternSpec::Gem => f.write_str("gem"),
            PatternSpec::Claw => f.write_str("claw"),
            PatternSpec::Union(terms) => {
                for (i, (m, p)) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    if *m != 1 {
                        write!(f, "{m}")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            PatternSpec::Explicit(g) => write!(f, "g6({})", graph6::encode(g)),
        }
    }
}

impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Cursor { s: s.as_bytes(), pos: 0, text: s };
        let spec = p.pattern()?;
        if p.pos != p.s.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(spec)
    }
}

/// Parses `pattern` or `{pattern,pattern,...}`.
pub fn parse_pattern_list(s: &str) -> Result<Vec<PatternSpec>> {
    let mut p = Cursor { s: s.as_bytes(), pos: 0, text: s };
    let out = if p.eat("{") {
        let mut items = vec![p.pattern()?];
        while p.eat(",") {
            items.push(p.pattern()?);
        }
        if !p.eat("}") {
            return Err(p.error("expected `,` or `}`"));
        }
        items
    } else {
        vec![p.pattern()?]
    };
    if p.pos != p.s.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

pub fn format_pattern_list(list: &[PatternSpec]) -> String {
    match list {
        [one] => one.to_string(),
        _ => format!("{{{}}}", list.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")),
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Cursor<'_> {
    fn error(&self, what: &str) -> Error {
        Error::parse(1, format!("pattern `{}` at offset {}: {what}", self.text, self.pos))
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        // Overlong numbers saturate and then fail the size checks.
        Some(self.text[start..self.pos].parse().unwrap_or(usize::MAX))
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        self.digits().ok_or_else(|| self.error(&format!("expected {what}")))
    }

    /// True when the atom may end at `at`.
    fn boundary(&self, at: usize) -> bool {
        matches!(self.s.get(at), None | Some(b'+' | b',' | b'}' | b'-'))
    }

    fn pattern(&mut self) -> Result<PatternSpec> {
        let mut terms = vec![self.term()?];
        while self.eat("+") {
            terms.push(self.term()?);
        }
        let total: usize = terms.iter().map(|(m, p)| m.saturating_mul(p.vertex_count())).fold(0, usize::saturating_add);
        if total > MAX_VERTICES {
            return Err(self.error(&format!("pattern has {total} vertices, above {MAX_VERTICES}")));
        }
        if let [(1, _)] = terms[..] {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(PatternSpec::Union(terms))
    }

    fn term(&mut self) -> Result<(usize, PatternSpec)> {
        let mult = self.digits().unwrap_or(1);
        if mult == 0 {
            return Err(self.error("multiplicity must be positive"));
        }
        Ok((mult, self.atom()?))
    }

    fn atom(&mut self) -> Result<PatternSpec> {
        for (word, spec) in [("paw", PatternSpec::Paw), ("gem", PatternSpec::Gem), ("claw", PatternSpec::Claw)] {
            if self.eat(word) {
                return Ok(spec);
            }
        }
        if self.eat("g6(") {
            let start = self.pos;
            while self.peek().is_some_and(|c| c != b')') {
                self.pos += 1;
            }
            let body = &self.text[start..self.pos];
            if !self.eat(")") {
                return Err(self.error("unterminated g6("));
            }
            return graph6::decode(body)
                .map(PatternSpec::Explicit)
                .map_err(|e| self.error(&format!("bad graph6: {e}")));
        }
        let check = |ok: bool, cur: &Self, why: &str| if ok { Ok(()) } else { Err(cur.error(why)) };
        match self.peek() {
            Some(b'P') => {
                self.pos += 1;
                let k = self.number("path order")?;
                check(k >= 1, self, "P needs at least one vertex")?;
                Ok(PatternSpec::Path(k))
            }
            Some(b'C') => {
                self.pos += 1;
                let k = self.number("cycle length")?;
                check(k >= 3, self, "C needs at least three vertices")?;
                Ok(PatternSpec::Cycle(k))
            }
            Some(b'K') => {
                self.pos += 1;
                let a = self.number("clique order")?;
                if self.peek() == Some(b',') {
                    let save = self.pos;
                    self.pos += 1;
                    if let Some(b) = self.digits() {
                        if self.boundary(self.pos) {
                            check(a >= 1 && b >= 1, self, "biclique sides must be nonempty")?;
                            return Ok(PatternSpec::Biclique(a, b));
                        }
                    }
                    self.pos = save;
                }
                if self.s[self.pos..].starts_with(b"-e") && self.boundary(self.pos + 2) {
                    self.pos += 2;
                    check(a >= 2, self, "K-e needs at least two vertices")?;
                    return Ok(PatternSpec::CompleteMinusEdge(a));
                }
                check(a >= 1, self, "K needs at least one vertex")?;
                Ok(PatternSpec::Complete(a))
            }
            _ => Err(self.error("expected a pattern")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn g(s: &str) -> Graph {
        s.parse::<PatternSpec>().unwrap().to_graph().unwrap()
    }

    #[test]
    fn named_shapes() {
        assert!(is_isomorphic(&g("paw"), &Graph::path(3).disjoint_union(&Graph::new(1)).unwrap().complement()).unwrap());
        assert_eq!(g("gem").n(), 5);
        assert_eq!(g("gem").edge_count(), 7);
        assert!(is_isomorphic(&g("claw"), &g("K1,3")).unwrap());
        assert_eq!(g("K5-e").edge_count(), 9);
        assert_eq!(g("K2+3K1").n(), 5);
        assert_eq!(g("C4+2K1").edge_count(), 4);
        assert_eq!(g("2K1,4").n(), 10);
        assert_eq!(g("2K2").edge_count(), 2);
    }

    #[test]
    fn display_round_trips() {
        for s in ["P4+P1", "K3+K1", "K2+3K1", "K2,3", "K5-e", "2K2", "2K1,3", "gem", "C5", "g6(Dhc)"] {
            let p: PatternSpec = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(p.to_string().parse::<PatternSpec>().unwrap(), p);
        }
    }

    #[test]
    fn lists() {
        let l = parse_pattern_list("{K2,3,C4}").unwrap();
        assert_eq!(l, vec![PatternSpec::Biclique(2, 3), PatternSpec::Cycle(4)]);
        let l = parse_pattern_list("{K3,C4}").unwrap();
        assert_eq!(l, vec![PatternSpec::Complete(3), PatternSpec::Cycle(4)]);
        assert_eq!(parse_pattern_list("{K3+K1,K2+3K1,C4+2K1}").unwrap().len(), 3);
        assert_eq!(format_pattern_list(&l), "{K3,C4}");
    }

    #[test]
    fn rejects_nonsense() {
        for s in ["", "Q3", "C2", "P0", "K0", "0K2", "K2,", "K3+", "{K3", "g6(Dh", "K1-e", "P99"] {
            assert!(s.parse::<PatternSpec>().is_err() || parse_pattern_list(s).is_err(), "{s}");
        }
        assert!("P65".parse::<PatternSpec>().is_err());
    }
}
