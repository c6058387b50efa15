use serde::{Deserialize, Serialize};

use super::numbers::{alpha_in, omega_in};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::limits::{check_cap, Limits};

/// A partition `(a, b)` of the vertices with `omega(G[a]) <= k` and
/// `alpha(G[b]) <= k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub k: usize,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_set(self.a)?;
        g.check_set(self.b)?;
        if self.a.intersects(self.b) || (self.a | self.b) != g.vertices() {
            return Err(Error::InvalidParameter(format!(
                "{} and {} do not partition the {} vertices",
                self.a,
                self.b,
                g.n()
            )));
        }
        let (w, a) = (omega_in(g, self.a), alpha_in(g, self.b));
        if w > self.k || a > self.k {
            return Err(Error::InvalidParameter(format!(
                "omega(G[A]) = {w} and alpha(G[B]) = {a} exceed k = {}",
                self.k
            )));
        }
        Ok(())
    }
}

/// Smallest `k` for which `g` is `k`-split, by trying every subset `A` in
/// increasing bitmask order; the first optimal partition is returned.
pub fn splitness(g: &Graph) -> Result<(usize, SplitPartition)> {
    check_cap("splitness", g.n(), Limits::ORACLE_CEILING)?;
    let full = g.vertices();
    let mut best: Option<SplitPartition> = None;
    for mask in 0..1u64 << g.n() {
        let a = VertexSet::from_bits(mask);
        let b = full - a;
        let bound = best.as_ref().map_or(usize::MAX, |p| p.k);
        let w = omega_in(g, a);
        if w >= bound {
            continue;
        }
        let k = w.max(alpha_in(g, b));
        if k < bound {
            best = Some(SplitPartition { a, b, k });
        }
    }
    let p = best.expect("at least one partition");
    Ok((p.k, p))
}
