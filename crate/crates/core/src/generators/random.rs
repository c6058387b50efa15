use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::patterns::ClassFilter;

pub const RANDOM_MAX_VERTICES: usize = 32;
pub const DEFAULT_BUDGET: usize = 200_000;

/// Rejection sampling from `G(n, p)`. Each attempt draws `p` afresh: half
/// the time from the sparse regime `p = d / (n - 1)` with `d` in
/// `[0.3, 3]`, otherwise uniformly from `[0, 1]`. Reproducible per seed.
pub fn random_in_class(n: usize, filter: &ClassFilter, seed: u64) -> Result<Graph> {
    random_in_class_with_budget(n, filter, seed, DEFAULT_BUDGET, &Limits::default())
}

pub fn random_in_class_with_budget(
    n: usize,
    filter: &ClassFilter,
    seed: u64,
    budget: usize,
    limits: &Limits,
) -> Result<Graph> {
    if n > RANDOM_MAX_VERTICES {
        return Err(Error::TooLarge { what: "random sampling", n, cap: RANDOM_MAX_VERTICES });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let p = if n >= 2 && rng.gen_bool(0.5) {
            (rng.gen_range(0.3..=3.0) / (n - 1) as f64).min(1.0)
        } else {
            rng.gen::<f64>()
        };
        let mut g = Graph::new(n);
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if filter.matches_within(&g, limits)? {
            return Ok(g);
        }
    }
    Err(Error::BudgetExhausted { attempts: budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{is_chordal, is_ok_free};

    #[test]
    fn samples_pass_the_filter() {
        let g = random_in_class(5, &"chordal".parse().unwrap(), 7).unwrap();
        assert!(is_chordal(&g));
        let f: ClassFilter = "K1,3-free & O2-free".parse().unwrap();
        let g = random_in_class(12, &f, 1).unwrap();
        assert!(is_ok_free(&g, 2) && f.matches(&g).unwrap());
    }

    #[test]
    fn deterministic_per_seed() {
        let f: ClassFilter = "C4-free".parse().unwrap();
        assert_eq!(random_in_class(9, &f, 3).unwrap(), random_in_class(9, &f, 3).unwrap());
    }

    #[test]
    fn budget_and_cap() {
        let never: ClassFilter = "K2-free & has-edge".parse().unwrap();
        let err = random_in_class_with_budget(6, &never, 0, 50, &Limits::default()).unwrap_err();
        assert_eq!(err, Error::BudgetExhausted { attempts: 50 });
        assert!(random_in_class(33, &never, 0).is_err());
    }
}
