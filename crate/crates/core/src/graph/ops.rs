use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};
use crate::error::{Error, Result};
use crate::limits::MAX_VERTICES;

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Graph {
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Vertex `i` of the result is the `i`-th entry of [`Graph::edges`].
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        let mut l = Graph::try_new(edges.len())?;
        for i in 0..edges.len() {
            let (a, b) = edges[i];
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    l.add_edge(i, j);
                }
            }
        }
        Ok(l)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n;
        let mut g = Graph::try_new(n1 + other.n)?;
        for v in 0..n1 {
            g.adj[v] = self.adj[v];
        }
        for v in 0..other.n {
            g.adj[n1 + v] = other.adj[v] << n1;
        }
        Ok(g)
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).bits();
        let right = VertexSet::full(g.n).bits() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Replaces edge `uv` by a path `u-w-v` through a new vertex `w = n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.with_extra_vertices(1)?;
        let w = self.n;
        g.remove_edge(u, v);
        g.add_edge(u, w);
        g.add_edge(w, v);
        Ok(g)
    }

    /// Subdivides every edge once; the new vertex of the `i`-th edge of
    /// [`Graph::edges`] is `n + i`.
    pub fn subdivide_all(&self) -> Result<Graph> {
        let edges = self.edges();
        let mut g = self.with_extra_vertices(edges.len())?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            let w = self.n + i;
            g.remove_edge(u, v);
            g.add_edge(u, w);
            g.add_edge(w, v);
        }
        Ok(g)
    }

    fn with_extra_vertices(&self, k: usize) -> Result<Graph> {
        if self.n + k > MAX_VERTICES {
            return Err(Error::TooLarge { what: "graph", n: self.n + k, cap: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.resize(self.n + k, 0);
        Ok(Graph::from_adjacency(adj))
    }

    /// Merges the endpoints of `uv` into the smaller endpoint; parallel
    /// edges collapse and the loop disappears.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let merged = (self.neighbors(keep) | self.neighbors(gone)).without(keep).without(gone);
        let mut h = self.clone();
        h.adj[keep] = merged.bits();
        for w in merged {
            h.adj[w] |= 1 << keep;
        }
        Ok(h.delete_vertices(VertexSet::singleton(gone)))
    }

    /// Vertices of `s` in ascending order become `0..|s|`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        Ok(self.induced(s))
    }

    pub(crate) fn induced(&self, s: VertexSet) -> Graph {
        let members = s.to_vec();
        let adj = members
            .iter()
            .map(|&v| {
                let row = self.adj[v] & s.bits();
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| row >> w & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// `G - s`; the survivors keep their relative order.
    pub fn delete_vertices(&self, s: VertexSet) -> Graph {
        self.induced(self.vertices() - s)
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_in(self.vertices())
    }

    pub fn components_in(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_of(v, within);
            left -= c;
            out.push(c);
        }
        out
    }

    /// Vertices reachable from `v` inside `within`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighbors_of_set(frontier) & within;
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_of(v, s) == s,
        }
    }

    pub fn is_forest(&self) -> bool {
        self.is_forest_in(self.vertices())
    }

    pub fn is_forest_in(&self, s: VertexSet) -> bool {
        self.edge_count_in(s) + self.components_in(s).len() == s.len()
    }

    /// `|E| - |V| + #components`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.components().len() - self.n
    }

    pub fn girth(&self) -> Girth {
        match self.shortest_cycle_in(self.vertices()) {
            Some(c) => Girth::Finite(c.len()),
            None => Girth::Infinite,
        }
    }

    /// A shortest cycle of `G[within]`, listed in cyclic order starting at
    /// its root. The root is the lowest-indexed vertex whose breadth-first
    /// search closes a cycle of girth length; among closing edges the
    /// lexicographically smallest pair wins, and BFS parents prefer lower
    /// indices. A shortest cycle is always chordless.
    pub fn shortest_cycle_in(&self, within: VertexSet) -> Option<Vec<usize>> {
        let mut best: Option<(usize, usize, usize, usize)> = None; // (len, root, u, w)
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in within {
            if let Some((len, ..)) = best {
                if len == 3 {
                    break;
                }
            }
            if let Some((len, u, w)) = self.bfs_cycle(root, within, &mut dist, &mut parent) {
                if best.is_none_or(|(b, ..)| len < b) {
                    best = Some((len, root, u, w));
                }
            }
        }
        let (_, root, u, w) = best?;
        self.bfs_cycle(root, within, &mut dist, &mut parent);
        let climb = |mut x: usize| {
            let mut path = vec![x];
            while x != root {
                x = parent[x];
                path.push(x);
            }
            path
        };
        let mut left = climb(u);
        let right = climb(w);
        left.reverse(); // root .. u
        left.extend_from_slice(&right[..right.len() - 1]); // w .. child of root
        Some(left)
    }

    /// Returns the shortest closed walk `(len, u, w)` found from `root`.
    fn bfs_cycle(
        &self,
        root: usize,
        within: VertexSet,
        dist: &mut [usize],
        parent: &mut [usize],
    ) -> Option<(usize, usize, usize)> {
        for v in within {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut order = Vec::new();
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in self.neighbors(x) & within {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for &u in &order {
            for w in self.neighbors(u) & within {
                if w <= u || parent[w] == u || parent[u] == w {
                    continue;
                }
                let len = dist[u] + dist[w] + 1;
                if best.is_none_or(|(b, bu, bw)| (len, u, w) < (b, bu, bw)) {
                    best = Some((len, u, w));
                }
            }
        }
        best
    }

    /// Proper 2-colouring side, or `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = VertexSet::EMPTY;
        let mut seen = VertexSet::EMPTY;
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if !seen.contains(y) {
                        seen.insert(y);
                        if !side.contains(x) {
                            side.insert(y);
                        }
                        queue.push_back(y);
                    } else if side.contains(x) == side.contains(y) {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}
