//! Ramsey upper bounds and the level-recursion bound `f(n, N)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::CertError;

/// Bounds whose binary length would pass this many bits are not materialized.
pub const MAX_BOUND_BITS: u64 = 1 << 20;

/// An upper bound that is either known exactly or only known to be enormous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Exact(BigUint),
    /// The bound is at least `2^min_bits`; its digits were not computed.
    Huge { min_bits: u64 },
}

impl Bound {
    pub fn from_usize(v: usize) -> Self {
        Bound::Exact(BigUint::from(v))
    }

    /// Whether `x ≤ self`.
    pub fn admits(&self, x: usize) -> bool {
        match self {
            Bound::Exact(b) => BigUint::from(x) <= *b,
            Bound::Huge { min_bits } => (x as u128) < (1u128 << (*min_bits).min(127)),
        }
    }

    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            Bound::Exact(b) => Some(b),
            Bound::Huge { .. } => None,
        }
    }

    pub fn add(&self, other: &Bound) -> Bound {
        match (self, other) {
            (Bound::Exact(a), Bound::Exact(b)) => Bound::Exact(a + b),
            (Bound::Huge { min_bits: a }, Bound::Huge { min_bits: b }) => {
                Bound::Huge { min_bits: *a.max(b) }
            }
            (Bound::Huge { min_bits }, _) | (_, Bound::Huge { min_bits }) => {
                Bound::Huge { min_bits: *min_bits }
            }
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exact(b) => write!(f, "{b}"),
            Bound::Huge { min_bits } => write!(f, ">=2^{min_bits}"),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Ramsey numbers: a small table of known values, binomial bound elsewhere.
#[derive(Debug, Clone)]
pub struct RamseyBounder {
    table: Vec<((usize, usize), usize)>,
}

impl Default for RamseyBounder {
    fn default() -> Self {
        RamseyBounder {
            table: vec![
                ((3, 3), 6),
                ((3, 4), 9),
                ((3, 5), 14),
                ((3, 6), 18),
                ((4, 4), 18),
                ((4, 5), 25),
            ],
        }
    }
}

impl RamseyBounder {
    /// Only the binomial bound, for comparison.
    pub fn binomial_only() -> Self {
        RamseyBounder { table: Vec::new() }
    }

    pub fn exact(&self, m: usize, n: usize) -> Option<usize> {
        let key = (m.min(n), m.max(n));
        match key {
            (0, _) => Some(0),
            (1, _) => Some(1),
            (2, b) => Some(b),
            _ => self.table.iter().find(|(k, _)| *k == key).map(|&(_, v)| v),
        }
    }

    /// `C(m + n − 2, m − 1)`.
    pub fn binomial(m: &BigUint, n: &BigUint) -> Bound {
        if m.is_zero() || n.is_zero() {
            return Bound::Exact(BigUint::zero());
        }
        let (small, large) = if m <= n { (m, n) } else { (n, m) };
        let k = match small.to_u64() {
            Some(k) if k <= 1 << 16 => k - 1,
            // C(2k, k) >= 2^k.
            _ => return Bound::Huge { min_bits: 1 << 16 },
        };
        // C(large - 1 + k, k) >= (large / k)^k.
        let log_k = 64 - k.leading_zeros() as u64;
        let lower = k.saturating_mul(large.bits().saturating_sub(1 + log_k));
        if lower > MAX_BOUND_BITS {
            return Bound::Huge { min_bits: MAX_BOUND_BITS };
        }
        let base = large - 1u32;
        let mut acc = BigUint::one();
        for j in 1..=k {
            acc = acc * (&base + j) / j;
        }
        Bound::Exact(acc)
    }

    /// Upper bound on `R(m, n)`.
    pub fn upper(&self, m: usize, n: &BigUint) -> Bound {
        if let Some(small) = n.to_usize() {
            if let Some(v) = self.exact(m, small) {
                return Bound::from_usize(v);
            }
        }
        Self::binomial(&BigUint::from(m), n)
    }
}

/// `f(n, N) = n − 2 + (n − 3) Σ_{i=1}^{N−1} (β_i − 1)` with `α_1 = n`,
/// `β_i = R(n, α_i)` and `α_{i+1} = (n − 2)(β_i − 1) + 1`.
pub fn f_bound(n: usize, big_n: usize, bounder: &RamseyBounder) -> Result<Bound, CertError> {
    if n < 4 {
        return Err(CertError::BadParams(format!("f(n, N) needs n >= 4, got {n}")));
    }
    if big_n < 1 {
        return Err(CertError::BadParams("f(n, N) needs N >= 1".into()));
    }
    let mut sum = BigUint::zero();
    let mut alpha = BigUint::from(n);
    for _ in 1..big_n {
        let beta = match bounder.upper(n, &alpha) {
            Bound::Exact(b) => b,
            huge => return Ok(huge),
        };
        let beta_minus = beta - 1u32;
        sum += &beta_minus;
        alpha = beta_minus * (n - 2) + 1u32;
    }
    Ok(Bound::Exact(sum * (n - 3) + (n - 2)))
}

/// `β_i` for `i = 1..=count`; once one is huge, the rest repeat it.
pub fn betas(n: usize, count: usize, bounder: &RamseyBounder) -> Vec<Bound> {
    let mut out = Vec::with_capacity(count);
    let mut alpha = BigUint::from(n);
    for _ in 0..count {
        let beta = bounder.upper(n, &alpha);
        out.push(beta.clone());
        match beta {
            Bound::Exact(b) => alpha = (b - 1u32) * (n - 2) + 1u32,
            Bound::Huge { .. } => {
                while out.len() < count {
                    out.push(beta.clone());
                }
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(b: Bound) -> BigUint {
        b.exact().cloned().expect("exact bound")
    }

    #[test]
    fn small_values() {
        let r = RamseyBounder::default();
        assert_eq!(exact(f_bound(4, 1, &r).unwrap()), BigUint::from(2u32));
        assert_eq!(exact(f_bound(4, 2, &r).unwrap()), BigUint::from(19u32));
        // Without the table R(4,4) <= C(6,3) = 20.
        let plain = RamseyBounder::binomial_only();
        assert_eq!(exact(f_bound(4, 2, &plain).unwrap()), BigUint::from(21u32));
        assert!(f_bound(3, 2, &r).is_err());
        assert!(f_bound(4, 0, &r).is_err());
    }

    #[test]
    fn table_is_symmetric_and_below_the_binomial() {
        let r = RamseyBounder::default();
        for m in 1..7 {
            for n in 1..7 {
                assert_eq!(r.exact(m, n), r.exact(n, m));
                if let Some(v) = r.exact(m, n) {
                    let b = RamseyBounder::binomial(&BigUint::from(m), &BigUint::from(n));
                    assert!(BigUint::from(v) <= exact(b), "R({m},{n})");
                }
            }
        }
        assert_eq!(
            exact(RamseyBounder::binomial(&BigUint::from(5u32), &BigUint::from(5u32))),
            BigUint::from(70u32)
        );
    }

    #[test]
    fn five_four_is_exact_and_large() {
        let r = RamseyBounder::default();
        let f = exact(f_bound(5, 4, &r).unwrap());
        assert!(f.bits() > 100);
        let mut prev = BigUint::zero();
        for big_n in 1..6 {
            let f = exact(f_bound(5, big_n, &r).unwrap());
            assert!(f >= prev);
            prev = f;
        }
    }

    #[test]
    fn runaway_values_become_huge() {
        let r = RamseyBounder::default();
        let f = f_bound(6, 18, &r).unwrap();
        assert!(matches!(f, Bound::Huge { .. }));
        assert!(f.admits(1_000_000));
        assert!(f.to_string().starts_with(">=2^"));
    }

    #[test]
    fn betas_match_the_recursion() {
        let r = RamseyBounder::default();
        let b = betas(4, 2, &r);
        assert_eq!(exact(b[0].clone()), BigUint::from(18u32));
        // α_2 = 2 * 17 + 1 = 35, R(4, 35) <= C(37, 3).
        assert_eq!(exact(b[1].clone()), BigUint::from(7770u32));
    }
}
