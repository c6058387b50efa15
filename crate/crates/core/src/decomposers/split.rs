use super::{add_to_every_bag, certify, lift, tags, BoundKind, BoundedDecomposition};
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::oracles::{alpha_in, treewidth_within, SplitPartition, TreeDecomposition};

/// A treewidth-optimal decomposition of `G[A]` with `B` added to every bag.
///
/// Each bag is `X ∪ B` with `X` a bag over `A`, so its independence number
/// is at most `alpha(G[X]) + alpha(G[B])`; the largest such sum is the
/// certified bound.
pub fn split_decomposition(g: &Graph, part: &SplitPartition) -> Result<BoundedDecomposition> {
    split_decomposition_within(g, part, &Limits::default())
}

pub fn split_decomposition_within(g: &Graph, part: &SplitPartition, limits: &Limits) -> Result<BoundedDecomposition> {
    part.validate(g)?;
    let alpha_b = alpha_in(g, part.b);
    let (mut td, bound) = if part.a.is_empty() {
        (TreeDecomposition { n: g.n(), bags: vec![part.b], edges: Vec::new() }, alpha_b)
    } else {
        let (_, sub) = treewidth_within(&g.induced(part.a), limits)?;
        let td = lift(&sub, part.a, g.n());
        let worst = td.bags.iter().map(|&x| alpha_in(g, x)).max().unwrap_or(0);
        (td, worst + alpha_b)
    };
    add_to_every_bag(&mut td, part.b);
    certify(g, td, BoundKind::Alpha, bound, tags::SPLIT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::splitness;
    use crate::VertexSet;

    #[test]
    fn empty_a_gives_one_bag() {
        let g = Graph::complete(4);
        let (_, p) = splitness(&g).unwrap();
        let d = split_decomposition(&g, &p).unwrap();
        assert_eq!(d.td.bags, vec![VertexSet::full(4)]);
        assert_eq!(d.measured, 1);
    }

    #[test]
    fn five_cycle() {
        let g = Graph::cycle(5);
        let (k, p) = splitness(&g).unwrap();
        let d = split_decomposition(&g, &p).unwrap();
        assert!(d.measured <= d.bound_value);
        assert!(d.bound_value <= 2 + k);
    }

    #[test]
    fn forest_with_empty_b() {
        let g = Graph::path(5);
        let p = SplitPartition { a: g.vertices(), b: VertexSet::EMPTY, k: 2 };
        let d = split_decomposition(&g, &p).unwrap();
        assert!(d.measured <= 2);
        let bad = SplitPartition { a: g.vertices(), b: VertexSet::EMPTY, k: 1 };
        assert!(split_decomposition(&g, &bad).is_err());
    }
}
