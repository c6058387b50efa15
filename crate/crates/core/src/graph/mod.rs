//! Finite simple undirected graphs on vertices `0..n`, with `n <= 64`.
//!
//! Every derived graph documents how its vertices relate to the inputs so
//! witnesses can be mapped back:
//!
//! * [`Graph::induced_subgraph`] keeps the members of the set in ascending
//!   order, so new vertex `i` is the `i`-th smallest member.
//! * [`Graph::join`] and [`Graph::disjoint_union`] place the first graph on
//!   `0..n1` and the second on `n1..n1+n2`.
//! * [`Graph::line_graph`] numbers edges lexicographically by sorted endpoint
//!   pair; see [`Graph::edges`].
//! * Subdivision appends the new vertex (or vertices, in edge order) at the end.
//! * Contraction of `uv` keeps the smaller endpoint as the merged vertex and
//!   shifts vertices above the larger endpoint down by one.

mod canon;
mod ops;
mod set;

pub use canon::{canonical_form, find_isomorphism, is_isomorphic, CanonicalForm};
pub(crate) use canon::search_order;
pub use ops::Girth;
pub use set::VertexSet;

use std::fmt;

use crate::error::{Error, Result};
use crate::limits::MAX_VERTICES;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`]; use [`Graph::try_new`] for
    /// untrusted sizes.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("graph size above MAX_VERTICES")
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { what: "graph", n, cap: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Panics on out-of-range endpoints or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | 1 << v)
    }

    /// Union of neighbourhoods of `s`, excluding `s` itself.
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in s {
            out |= self.adj[v];
        }
        VertexSet::from_bits(out) - s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edge_count_in(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.adj[v] & s.bits()).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet::from_bits(self.adj[u] >> u >> 1 << u << 1) {
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    pub(crate) fn adj(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            let v = (s - self.vertices()).first().unwrap_or(0);
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.neighbors(v).intersects(s))
    }

    /// A vertex cover contains an endpoint of every edge.
    pub fn uncovered_edge(&self, cover: VertexSet) -> Option<(usize, usize)> {
        self.edges()
            .into_iter()
            .find(|&(u, v)| !cover.contains(u) && !cover.contains(v))
    }

    // Named constructors.

    pub fn empty(n: usize) -> Self {
        Self::new(n)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            g.adj[u] = VertexSet::full(n).without(u).bits();
        }
        g
    }

    /// `P_n`: the path on `n` vertices `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// `C_n` for `n >= 3`, vertices in cyclic order.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Self::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{1,s}` with centre 0.
    pub fn star(s: usize) -> Self {
        Self::complete_bipartite(1, s)
    }

    /// `rows x cols` grid, vertex `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut g = Self::new(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    g.add_edge(v, v + 1);
                }
                if r + 1 < rows {
                    g.add_edge(v, v + cols);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
