//! Exact tree-alpha, tree-theta and treewidth.
//!
//! Each is `min over chordal supergraphs H of G` of the largest cost of a
//! maximal clique of `H`, for a cost that only grows under inclusion (so
//! fill edges never help). Minimal triangulations are exactly the fill
//! graphs of elimination orderings, and every maximal clique of a fill graph
//! is some `{v} ∪ (later fill neighbours of v)`. The minimum is therefore a
//! dynamic program over the set `S` of already-eliminated vertices:
//!
//! ```text
//! best[S] = min over v in S of max(best[S - v], cost({v} ∪ Q(S - v, v)))
//! ```
//!
//! where `Q(S, v)` is the set of vertices outside `S ∪ {v}` reachable from
//! `v` through `S`. Ties go to the smallest `v`, which fixes the returned
//! decomposition.

use std::collections::HashMap;

use super::decomposition::TreeDecomposition;
use super::numbers::{chromatic_rows, complement_rows, max_clique_rows};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::limits::{check_cap, Limits};

pub fn tree_alpha(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    tree_alpha_within(g, &Limits::default())
}

pub fn tree_alpha_within(g: &Graph, limits: &Limits) -> Result<(usize, TreeDecomposition)> {
    check_cap("tree-alpha", g.n(), limits.oracle)?;
    let comp = complement_rows(g);
    Ok(minimize(g, |bag| max_clique_rows(&comp, bag).count_ones() as usize))
}

pub fn tree_theta(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    tree_theta_within(g, &Limits::default())
}

pub fn tree_theta_within(g: &Graph, limits: &Limits) -> Result<(usize, TreeDecomposition)> {
    check_cap("tree-theta", g.n(), limits.oracle)?;
    let comp = complement_rows(g);
    Ok(minimize(g, |bag| chromatic_rows(&comp, bag)))
}

pub fn treewidth(g: &Graph) -> Result<usize> {
    Ok(treewidth_decomposition(g)?.0)
}

pub fn treewidth_decomposition(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    treewidth_within(g, &Limits::default())
}

pub fn treewidth_within(g: &Graph, limits: &Limits) -> Result<(usize, TreeDecomposition)> {
    check_cap("treewidth", g.n(), limits.oracle)?;
    Ok(minimize(g, |bag| (bag.count_ones() as usize).saturating_sub(1)))
}

/// Vertices outside `done ∪ {v}` reachable from `v` through `done`.
fn reach(g: &Graph, done: u64, v: usize) -> u64 {
    let adj = g.adj();
    let mut inside = 1u64 << v;
    let mut frontier = 1u64 << v;
    let mut out = 0u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[x];
        }
        out |= next & !done & !(1 << v);
        let grow = next & done & !inside;
        inside |= grow;
        frontier = grow;
    }
    out
}

fn minimize(g: &Graph, cost: impl Fn(u64) -> usize) -> (usize, TreeDecomposition) {
    let n = g.n();
    if n == 0 {
        return (0, TreeDecomposition { n: 0, bags: vec![VertexSet::EMPTY], edges: Vec::new() });
    }
    let mut memo: HashMap<u64, usize> = HashMap::new();
    let mut bag_cost = |bag: u64| *memo.entry(bag).or_insert_with(|| cost(bag));
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for s in 1..=full {
        let mut value = usize::MAX;
        let mut bits = s as u64;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let before = best[rest];
            if before >= value {
                continue;
            }
            let c = bag_cost(reach(g, rest as u64, v) | 1 << v);
            value = value.min(before.max(c));
        }
        best[s] = value;
    }
    // Recover the order with the smallest-vertex tie-break, last first.
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut bits = s as u64;
        loop {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            if best[rest].max(bag_cost(reach(g, rest as u64, v) | 1 << v)) == best[s] {
                order.push(v);
                s = rest;
                break;
            }
        }
    }
    order.reverse();
    (best[full], from_elimination_order(g, &order))
}

/// The clique tree of the fill graph of `order`, with redundant bags removed
/// and nodes numbered by sorted bag.
pub(crate) fn from_elimination_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut parent: Vec<Option<usize>> = Vec::with_capacity(n);
    let mut done = 0u64;
    for &v in order {
        let later = reach(g, done, v);
        bags.push(VertexSet::from_bits(later | 1 << v));
        parent.push(VertexSet::from_bits(later).iter().min_by_key(|&u| pos[u]).map(|u| pos[u]));
        done |= 1 << v;
    }
    let mut edges = Vec::new();
    let mut last_root: Option<usize> = None;
    for (i, p) in parent.iter().enumerate() {
        match p {
            Some(p) => edges.push((i, *p)),
            None => {
                if let Some(r) = last_root {
                    edges.push((r, i));
                }
                last_root = Some(i);
            }
        }
    }
    normalize(TreeDecomposition { n, bags, edges })
}

/// Contracts tree edges whose one bag contains the other, then renumbers
/// nodes by sorted bag contents and sorts the edge list.
pub(crate) fn normalize(td: TreeDecomposition) -> TreeDecomposition {
    let TreeDecomposition { n, mut bags, edges } = td;
    let m = bags.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut alive = vec![true; m];
    loop {
        let mut merged = false;
        'scan: for a in 0..m {
            if !alive[a] {
                continue;
            }
            for &b in &adj[a] {
                if bags[a].is_subset(bags[b]) {
                    // Fold a into b.
                    let moved: Vec<usize> = adj[a].iter().copied().filter(|&x| x != b).collect();
                    for &x in &moved {
                        adj[x].retain(|&y| y != a);
                        adj[x].push(b);
                        adj[b].push(x);
                    }
                    adj[b].retain(|&y| y != a);
                    adj[a].clear();
                    alive[a] = false;
                    merged = true;
                    break 'scan;
                }
            }
        }
        if !merged {
            break;
        }
    }
    let mut keep: Vec<usize> = (0..m).filter(|&i| alive[i]).collect();
    keep.sort_by_key(|&i| bags[i].to_vec());
    let mut new_id = vec![usize::MAX; m];
    for (j, &i) in keep.iter().enumerate() {
        new_id[i] = j;
    }
    let mut new_edges: Vec<(usize, usize)> = Vec::new();
    for &a in &keep {
        for &b in &adj[a] {
            let (x, y) = (new_id[a], new_id[b]);
            if x < y {
                new_edges.push((x, y));
            }
        }
    }
    new_edges.sort_unstable();
    let new_bags = keep.iter().map(|&i| std::mem::take(&mut bags[i])).collect();
    TreeDecomposition { n, bags: new_bags, edges: new_edges }
}
