#![allow(dead_code)]

use std::collections::BTreeMap;

use treealpha::graph::canonical_form;
use treealpha::{Graph, TreeDecomposition, VertexSet};

/// One representative per isomorphism class among all labelled graphs on
/// `n` vertices, found by brute force over edge subsets. Independent of the
/// library's orderly enumerator.
pub fn all_graphs_brute(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        seen.entry(canonical_form(&g).unwrap()).or_insert(g);
    }
    seen.into_values().collect()
}

pub fn lcg_graph(n: usize, seed: &mut u64, density_num: u64) -> Graph {
    let mut g = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if (*seed >> 33) % 8 < density_num {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn subsets(s: VertexSet) -> impl Iterator<Item = VertexSet> {
    let bits = s.bits();
    let mut sub = Some(0u64);
    std::iter::from_fn(move || {
        let cur = sub?;
        sub = if cur == bits { None } else { Some((cur.wrapping_sub(bits)) & bits) };
        Some(VertexSet::from_bits(cur))
    })
}

pub fn brute_alpha(g: &Graph, s: VertexSet) -> usize {
    subsets(s).filter(|&x| g.is_independent(x)).map(|x| x.len()).max().unwrap_or(0)
}

pub fn brute_omega(g: &Graph, s: VertexSet) -> usize {
    subsets(s).filter(|&x| g.is_clique(x)).map(|x| x.len()).max().unwrap_or(0)
}

/// Fewest cliques partitioning `s`.
pub fn brute_theta(g: &Graph, s: VertexSet) -> usize {
    fn rec(g: &Graph, left: VertexSet, memo: &mut BTreeMap<u64, usize>) -> usize {
        let Some(v) = left.first() else { return 0 };
        if let Some(&x) = memo.get(&left.bits()) {
            return x;
        }
        let rest = left.without(v);
        let best = subsets(rest & g.neighbors(v))
            .filter(|&c| g.is_clique(c))
            .map(|c| 1 + rec(g, rest - c, memo))
            .min()
            .unwrap();
        memo.insert(left.bits(), best);
        best
    }
    rec(g, s, &mut BTreeMap::new())
}

/// No induced cycle of length at least four, by checking every vertex subset.
pub fn brute_chordal(g: &Graph) -> bool {
    subsets(g.vertices()).all(|s| {
        s.len() < 4 || !(g.is_connected_set(s) && s.iter().all(|v| (g.neighbors(v) & s).len() == 2))
    })
}

/// The three conditions of a tree decomposition, checked literally.
pub fn brute_td_valid(g: &Graph, td: &TreeDecomposition) -> bool {
    let m = td.bags.len();
    if td.n != g.n() || (m == 0 && g.n() > 0) {
        return m == 0 && g.n() == 0;
    }
    if m > 0 && td.edges.len() != m - 1 {
        return false;
    }
    let tree_connected = |nodes: &[usize]| -> bool {
        if nodes.is_empty() {
            return false;
        }
        let mut seen = vec![nodes[0]];
        let mut stack = vec![nodes[0]];
        while let Some(x) = stack.pop() {
            for &(a, b) in &td.edges {
                for (p, q) in [(a, b), (b, a)] {
                    if p == x && nodes.contains(&q) && !seen.contains(&q) {
                        seen.push(q);
                        stack.push(q);
                    }
                }
            }
        }
        seen.len() == nodes.len()
    };
    let all: Vec<usize> = (0..m).collect();
    if !tree_connected(&all) {
        return false;
    }
    for v in 0..g.n() {
        let holding: Vec<usize> = (0..m).filter(|&i| td.bags[i].contains(v)).collect();
        if !tree_connected(&holding) {
            return false;
        }
    }
    g.edges().iter().all(|&(u, v)| td.bags.iter().any(|b| b.contains(u) && b.contains(v)))
}

pub fn prufer_trees(m: usize) -> Vec<Vec<(usize, usize)>> {
    if m == 1 {
        return vec![Vec::new()];
    }
    if m == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut out = Vec::new();
    let total = m.pow(m as u32 - 2);
    for code in 0..total {
        let mut seq = Vec::with_capacity(m - 2);
        let mut c = code;
        for _ in 0..m - 2 {
            seq.push(c % m);
            c /= m;
        }
        let mut degree = vec![1usize; m];
        for &x in &seq {
            degree[x] += 1;
        }
        let mut edges = Vec::new();
        for &x in &seq {
            let leaf = (0..m).find(|&i| degree[i] == 1).unwrap();
            edges.push((leaf, x));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..m).filter(|&i| degree[i] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
    }
    out
}

/// Minimum over all tree decompositions of the maximum bag cost: sets of
/// pairwise non-nested bags, every tree on them, valid ones only.
///
/// Restricting to non-nested bags loses nothing: contracting a tree edge
/// whose bags are nested never raises a monotone bag cost, and such a
/// decomposition has at most `n` bags.
pub fn brute_min(g: &Graph, cost: &dyn Fn(VertexSet) -> usize) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let candidates: Vec<VertexSet> = (1u64..1 << n).map(VertexSet::from_bits).collect();
    let trees: Vec<Vec<Vec<(usize, usize)>>> = (0..=n).map(|m| if m == 0 { vec![] } else { prufer_trees(m) }).collect();
    let mut best = usize::MAX;
    let mut chosen = Vec::new();
    choose(g, &candidates, 0, &mut chosen, &trees, cost, &mut best);
    best
}

fn choose(
    g: &Graph,
    candidates: &[VertexSet],
    from: usize,
    chosen: &mut Vec<VertexSet>,
    trees: &[Vec<Vec<(usize, usize)>>],
    cost: &dyn Fn(VertexSet) -> usize,
    best: &mut usize,
) {
    if !chosen.is_empty() {
        let value = chosen.iter().map(|&b| cost(b)).max().unwrap();
        if value < *best {
            for edges in &trees[chosen.len()] {
                let td = TreeDecomposition { n: g.n(), bags: chosen.clone(), edges: edges.clone() };
                if brute_td_valid(g, &td) {
                    *best = value;
                    break;
                }
            }
        }
    }
    if chosen.len() == g.n() {
        return;
    }
    for i in from..candidates.len() {
        let b = candidates[i];
        if chosen.iter().any(|&c| c.is_subset(b) || b.is_subset(c)) {
            continue;
        }
        chosen.push(b);
        choose(g, candidates, i + 1, chosen, trees, cost, best);
        chosen.pop();
    }
}
