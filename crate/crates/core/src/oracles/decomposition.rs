use std::fmt;

use serde::{Deserialize, Serialize};

use super::numbers::{alpha_in, theta_in};
use crate::graph::{Graph, VertexSet};

/// A tree decomposition of a graph on `n` vertices: node `i` carries
/// `bags[i]`, and `edges` are the tree edges between node ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub n: usize,
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

/// The first condition a decomposition fails, checked in this order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    HostMismatch { td_n: usize, graph_n: usize },
    NoBags,
    NotATree(String),
    VertexOutOfRange { bag: usize, vertex: usize },
    UncoveredVertex(usize),
    UncoveredEdge(usize, usize),
    DisconnectedTrace(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::HostMismatch { td_n, graph_n } => {
                write!(f, "host mismatch: decomposition is over {td_n} vertices, graph has {graph_n}")
            }
            Violation::NoBags => f.write_str("no bags"),
            Violation::NotATree(why) => write!(f, "not a tree: {why}"),
            Violation::VertexOutOfRange { bag, vertex } => {
                write!(f, "vertex out of range: bag {bag} holds vertex {vertex}")
            }
            Violation::UncoveredVertex(v) => write!(f, "uncovered vertex {v}"),
            Violation::UncoveredEdge(u, v) => write!(f, "uncovered edge {u}-{v}"),
            Violation::DisconnectedTrace(v) => {
                write!(f, "disconnected trace: bags containing vertex {v} are not connected")
            }
        }
    }
}

impl TreeDecomposition {
    pub fn single_bag(n: usize) -> Self {
        TreeDecomposition { n, bags: vec![VertexSet::full(n)], edges: Vec::new() }
    }

    /// Neighbour lists of the tree.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj
    }

    pub fn validate(&self, g: &Graph) -> Result<(), Violation> {
        if self.n != g.n() {
            return Err(Violation::HostMismatch { td_n: self.n, graph_n: g.n() });
        }
        let m = self.bags.len();
        if m == 0 {
            return if g.n() == 0 { Ok(()) } else { Err(Violation::NoBags) };
        }
        if self.edges.len() != m - 1 {
            return Err(Violation::NotATree(format!("{} nodes but {} edges", m, self.edges.len())));
        }
        for &(a, b) in &self.edges {
            if a >= m || b >= m {
                return Err(Violation::NotATree(format!("edge {a}-{b} names a missing node")));
            }
            if a == b {
                return Err(Violation::NotATree(format!("loop at node {a}")));
            }
        }
        let adj = self.adjacency();
        if reachable(&adj, |_| true, 0).iter().filter(|&&r| r).count() != m {
            return Err(Violation::NotATree("disconnected".into()));
        }
        for (i, bag) in self.bags.iter().enumerate() {
            if let Some(v) = (*bag - g.vertices()).first() {
                return Err(Violation::VertexOutOfRange { bag: i, vertex: v });
            }
        }
        let covered = self.bags.iter().fold(VertexSet::EMPTY, |acc, &b| acc | b);
        if let Some(v) = (g.vertices() - covered).first() {
            return Err(Violation::UncoveredVertex(v));
        }
        for (u, v) in g.edges() {
            let pair = VertexSet::singleton(u).with(v);
            if !self.bags.iter().any(|b| pair.is_subset(*b)) {
                return Err(Violation::UncoveredEdge(u, v));
            }
        }
        for v in g.vertices() {
            let start = self.bags.iter().position(|b| b.contains(v)).expect("covered");
            let seen = reachable(&adj, |i| self.bags[i].contains(v), start);
            if (0..m).any(|i| self.bags[i].contains(v) && !seen[i]) {
                return Err(Violation::DisconnectedTrace(v));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    /// Largest bag size.
    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0)
    }
}

fn reachable(adj: &[Vec<usize>], keep: impl Fn(usize) -> bool, start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] && keep(y) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Function-style alias for [`TreeDecomposition::validate`].
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<(), Violation> {
    td.validate(g)
}

/// Largest independence number of a bag.
pub fn alpha_of_decomposition(g: &Graph, td: &TreeDecomposition) -> usize {
    td.bags.iter().map(|&b| alpha_in(g, b)).max().unwrap_or(0)
}

/// Largest clique cover number of a bag.
pub fn theta_of_decomposition(g: &Graph, td: &TreeDecomposition) -> usize {
    td.bags.iter().map(|&b| theta_in(g, b)).max().unwrap_or(0)
}

/// Largest bag size minus one (0 for a decomposition without vertices).
pub fn width_of_decomposition(td: &TreeDecomposition) -> usize {
    td.max_bag().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_td(bags: &[&[usize]], n: usize) -> TreeDecomposition {
        TreeDecomposition {
            n,
            bags: bags.iter().map(|b| VertexSet::from(b.to_vec())).collect(),
            edges: (1..bags.len()).map(|i| (i - 1, i)).collect(),
        }
    }

    #[test]
    fn single_bag_measures() {
        let c5 = Graph::cycle(5);
        let td = TreeDecomposition::single_bag(5);
        assert!(td.is_valid(&c5));
        assert_eq!(alpha_of_decomposition(&c5, &td), 2);
        assert_eq!(theta_of_decomposition(&c5, &td), 3);
        assert_eq!(width_of_decomposition(&td), 4);
    }

    #[test]
    fn diagnostics() {
        let c5 = Graph::cycle(5);
        let td = path_td(&[&[0, 1, 2], &[0, 2, 3], &[0, 3]], 5);
        assert_eq!(td.validate(&c5), Err(Violation::UncoveredVertex(4)));
        let td = path_td(&[&[0, 1, 2], &[0, 2, 3], &[3, 4]], 5);
        let err = td.validate(&c5).unwrap_err();
        assert_eq!(err, Violation::UncoveredEdge(0, 4));
        assert!(err.to_string().contains("uncovered edge"));
        let td = path_td(&[&[0, 1, 2], &[2, 3, 4], &[0, 4]], 5);
        assert_eq!(td.validate(&c5), Err(Violation::DisconnectedTrace(0)));
        let mut td = path_td(&[&[0, 1, 2, 3, 4], &[0]], 5);
        td.edges.clear();
        assert!(matches!(td.validate(&c5), Err(Violation::NotATree(_))));
        assert!(matches!(TreeDecomposition::single_bag(4).validate(&c5), Err(Violation::HostMismatch { .. })));
    }

    #[test]
    fn forest_clique_tree() {
        let p4 = Graph::path(4);
        let td = path_td(&[&[0, 1], &[1, 2], &[2, 3]], 4);
        assert!(td.is_valid(&p4));
        assert_eq!(alpha_of_decomposition(&p4, &td), 1);
    }
}
