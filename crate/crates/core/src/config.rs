//! `key = value` configuration: caps and default parameters.
//!
//! ```text
//! # comments and blank lines are ignored
//! oracle_cap = 12
//! induced_minor_cap = 9
//! enumeration_cap = 8
//! t = 3
//! k = 2
//! s = 2
//! seed = 1
//! ```

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::patterns::ClassParams;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Config {
    pub limits: Limits,
    pub params: ClassParams,
    pub seed: u64,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        let mut cfg = Config::default();
        let mut seen = HashSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| Error::parse(line, format!("expected key = value, got `{content}`")))?;
            let (key, value) = (key.trim(), value.trim());
            if !seen.insert(key.to_string()) {
                return Err(Error::parse(line, format!("duplicate key `{key}`")));
            }
            let number = || -> Result<u64> {
                value.parse().map_err(|_| Error::parse(line, format!("`{key}` needs a nonnegative integer, got `{value}`")))
            };
            let small = || -> Result<usize> {
                usize::try_from(number()?).map_err(|_| Error::parse(line, format!("`{key}` is too large")))
            };
            match key {
                "oracle_cap" => cfg.limits.oracle = small()?,
                "induced_minor_cap" => cfg.limits.induced_minor = small()?,
                "enumeration_cap" => cfg.limits.enumeration = small()?,
                "t" => cfg.params.t = small()?,
                "k" => cfg.params.k = small()?,
                "s" => cfg.params.s = small()?,
                "seed" => cfg.seed = number()?,
                _ => return Err(Error::parse(line, format!("unknown key `{key}`"))),
            }
        }
        cfg.limits.validate()?;
        Ok(cfg)
    }
}
