//! Size caps for the exponential routines.

use crate::error::{Error, Result};

/// Hard upper bound on vertex count; adjacency rows are `u64` bitsets.
pub const MAX_VERTICES: usize = 64;

/// Canonical labelling packs the upper triangle into a `u128`.
pub const CANON_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap for tree-alpha, tree-theta and treewidth (subset dynamic programming).
    pub oracle: usize,
    /// Cap for the branch-set search behind `has_induced_minor`.
    pub induced_minor: usize,
    /// Cap for the non-isomorphic enumeration.
    pub enumeration: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { oracle: 10, induced_minor: 9, enumeration: 8 }
    }
}

impl Limits {
    /// Largest oracle cap accepted from configuration. The dynamic program
    /// keeps one entry per vertex subset.
    pub const ORACLE_CEILING: usize = 22;

    pub fn validate(&self) -> Result<()> {
        if self.oracle > Self::ORACLE_CEILING {
            return Err(Error::InvalidParameter(format!(
                "oracle cap {} above ceiling {}",
                self.oracle,
                Self::ORACLE_CEILING
            )));
        }
        if self.induced_minor > 16 {
            return Err(Error::InvalidParameter(format!(
                "induced-minor cap {} above ceiling 16",
                self.induced_minor
            )));
        }
        if self.enumeration > 10 {
            return Err(Error::InvalidParameter(format!(
                "enumeration cap {} above ceiling 10",
                self.enumeration
            )));
        }
        Ok(())
    }
}

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::TooLarge { what, n, cap })
    } else {
        Ok(())
    }
}
