//! Exact rational bookkeeping for the constants `epsilon_k` and `c_{k,t}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `delta[i]` and `epsilon[i]` belong to `k = i + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonTable {
    pub delta: Vec<BigRational>,
    pub epsilon: Vec<BigRational>,
}

impl EpsilonTable {
    pub fn epsilon(&self, k: usize) -> Option<&BigRational> {
        k.checked_sub(2).and_then(|i| self.epsilon.get(i))
    }
}

/// `epsilon_2 = delta_2` and, for `k >= 3`,
/// `epsilon_k = min(epsilon_{k-1}/20, delta_k/20, delta_k/(5(k+1)), 1/(30(k-2)))`.
pub fn epsilon_table(delta: &[BigRational]) -> Result<EpsilonTable> {
    if delta.is_empty() {
        return Err(Error::InvalidParameter("delta needs at least delta_2".into()));
    }
    for (i, d) in delta.iter().enumerate() {
        if *d <= BigRational::zero() || *d > BigRational::one() {
            return Err(Error::InvalidParameter(format!("delta_{} = {d} is not in (0, 1]", i + 2)));
        }
    }
    let int = |x: usize| BigRational::from_integer(BigInt::from(x));
    let mut epsilon = vec![delta[0].clone()];
    for (i, d) in delta.iter().enumerate().skip(1) {
        let k = i + 2;
        let candidates = [
            &epsilon[i - 1] / int(20),
            d / int(20),
            d / int(5 * (k + 1)),
            BigRational::one() / int(30 * (k - 2)),
        ];
        let min = candidates.into_iter().min().expect("four candidates");
        epsilon.push(min);
    }
    Ok(EpsilonTable { delta: delta.to_vec(), epsilon })
}

/// `floor((t - 1) / eps)`.
pub fn c_kt(eps: &BigRational, t: usize) -> Result<BigInt> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t = {t} must be at least 2")));
    }
    if *eps <= BigRational::zero() {
        return Err(Error::InvalidParameter(format!("epsilon = {eps} must be positive")));
    }
    Ok((BigRational::from_integer(BigInt::from(t - 1)) / eps).floor().to_integer())
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("`{s}` is not a rational number"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(p, q))
    } else {
        Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn hand_computed_values() {
        let t = epsilon_table(&[r("1/10"), r("1/10"), r("1/10")]).unwrap();
        assert_eq!(t.epsilon, vec![r("1/10"), r("1/200"), r("1/4000")]);
        assert_eq!(t.epsilon(3), Some(&r("1/200")));
        assert_eq!(c_kt(&r("1/200"), 11).unwrap(), BigInt::from(2000));
        assert_eq!(c_kt(&r("1/3"), 2).unwrap(), BigInt::from(3));
        assert_eq!(c_kt(&r("2/7"), 2).unwrap(), BigInt::from(3));
    }

    #[test]
    fn the_fourth_term_can_bind() {
        // With delta = 1 the 1/(30(k-2)) term wins at k = 3: 1/30 < 1/20.
        let t = epsilon_table(&[r("1"), r("1")]).unwrap();
        assert_eq!(t.epsilon[1], r("1/30"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(epsilon_table(&[r("0")]).is_err());
        assert!(epsilon_table(&[r("-1/2")]).is_err());
        assert!(epsilon_table(&[r("3/2")]).is_err());
        assert!(epsilon_table(&[]).is_err());
        assert!(c_kt(&r("1/2"), 1).is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
