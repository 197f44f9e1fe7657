//! Whitney numbers of fences, computed two independent ways.
//!
//! A fence of order n is the poset `p1 < p2 > p3 < p4 > ...`. The Whitney
//! number `f(n, i)` counts its order-i ideals (downward-closed size-i
//! subsets). The subsequence `W_{2t} = f(2t, t)` governs the center-site
//! squared commutator of the built-in rule, so this module provides:
//!
//! - [`Fence::count_ideals`]: brute-force enumeration over subsets: slow,
//!   obviously correct, and kept that way as the oracle;
//! - [`whitney_hypergeometric`]: an exact terminating hypergeometric series
//!   evaluated over arbitrary-precision rationals.
//!
//! Floating point is banned here: the values feed modular comparisons.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Subsets of `t` where the brute-force oracle is still run by default when
/// building a [`WhitneySequence`]: a fence of order 24 means 2^24 candidate
/// subsets, which stays under a minute.
pub const DEFAULT_ORACLE_LIMIT: u32 = 12;

/// The fence poset `p1 < p2 > p3 < p4 > ...` on `n` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fence {
    n: usize,
}

impl Fence {
    /// A fence of order `n` (0 and 1 are degenerate but valid: no relations).
    /// Orders above 63 do not fit the bitmask enumeration.
    pub fn new(n: usize) -> Self {
        assert!(n <= 63, "fence order {n} exceeds bitmask enumeration range");
        Self { n }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Covering relations as `(lower, upper)` pairs of 0-based point indices.
    /// Relation k connects points k and k+1, alternating direction; for a
    /// fence these covers are the entire order relation.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n.saturating_sub(1)).map(|k| if k % 2 == 0 { (k, k + 1) } else { (k + 1, k) })
    }

    fn is_ideal(&self, subset: u64) -> bool {
        self.relations()
            .all(|(lo, hi)| subset & (1 << hi) == 0 || subset & (1 << lo) != 0)
    }

    /// Counts order-`i` ideals by enumerating every size-`i` subset and
    /// testing downward closure against the covering relations.
    pub fn count_ideals(&self, i: usize) -> Result<u64> {
        if i > self.n {
            return Err(Error::IdealOrderOutOfRange { order: i, n: self.n });
        }
        if i == 0 {
            return Ok(1); // the empty ideal
        }
        let mut count = 0u64;
        let limit = 1u64 << self.n;
        // Gosper's hack walks the size-i subsets in increasing mask order.
        let mut mask = (1u64 << i) - 1;
        while mask < limit {
            if self.is_ideal(mask) {
                count += 1;
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            if r >= limit {
                break;
            }
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        Ok(count)
    }

    /// Total number of ideals of every order.
    pub fn total_ideal_count(&self) -> u64 {
        (0u64..1 << self.n).filter(|&m| self.is_ideal(m)).count() as u64
    }
}

/// `W_{2t} = f(2t, t)` via the terminating series
/// `4F3((1-t)/2, (1-t)/2, -t/2, -t/2; 1, -t, -t; 16)`,
/// evaluated with exact rational term recurrences. The upper parameters are
/// non-positive integers or half-integers, so some numerator factor reaches
/// zero by `k = ceil(t/2)` and the sum is finite; the result is checked to be
/// an integer before it is returned.
pub fn whitney_hypergeometric(t: u32) -> Result<BigInt> {
    if t == 0 {
        return Ok(BigInt::one()); // empty fence, empty ideal
    }
    let half = |num: i64| BigRational::new(BigInt::from(num), BigInt::from(2));
    let upper = [
        half(1 - t as i64),
        half(1 - t as i64),
        half(-(t as i64)),
        half(-(t as i64)),
    ];
    let lower = [
        BigRational::one(),
        BigRational::from(BigInt::from(-(t as i64))),
        BigRational::from(BigInt::from(-(t as i64))),
    ];
    let z = BigRational::from(BigInt::from(16));

    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    for k in 0..=t {
        let kq = BigRational::from(BigInt::from(k as i64));
        let mut num = z.clone();
        let mut done = false;
        for a in &upper {
            let factor = a + &kq;
            if factor.is_zero() {
                done = true;
                break;
            }
            num *= factor;
        }
        if done {
            break;
        }
        let mut den = BigRational::from(BigInt::from(k as i64 + 1));
        for b in &lower {
            den *= b + &kq;
        }
        debug_assert!(!den.is_zero(), "series must terminate before a lower parameter vanishes");
        term = term * num / den;
        sum += &term;
    }

    if !sum.is_integer() {
        return Err(Error::NonIntegerWhitney { t, value: sum.to_string() });
    }
    let value = sum.to_integer();
    debug_assert!(value.is_positive());
    Ok(value)
}

/// One row of a [`WhitneySequence`].
#[derive(Clone, Debug)]
pub struct WhitneyEntry {
    pub t: u32,
    pub value: BigInt,
    /// True when the brute-force ideal count was run and agreed.
    pub oracle_checked: bool,
}

/// `W_{2t}` for `t = 1..=t_max`, hypergeometric values cross-checked against
/// the enumeration oracle wherever the oracle is feasible.
#[derive(Clone, Debug, Default)]
pub struct WhitneySequence {
    pub values: Vec<WhitneyEntry>,
}

impl WhitneySequence {
    /// Computes the sequence, running the oracle for `t <= oracle_limit`.
    /// A disagreement between the two routes is an error, not a warning.
    /// Oracle limits above 31 are rejected up front: a fence of order 2t
    /// beyond that cannot be enumerated with 64-bit subset masks.
    pub fn compute(t_max: u32, oracle_limit: u32) -> Result<Self> {
        if oracle_limit > 31 && t_max > 31 {
            return Err(Error::Config(format!(
                "oracle limit {oracle_limit} is not enumerable; the brute-force check tops out at t = 31"
            )));
        }
        let mut values = Vec::with_capacity(t_max as usize);
        for t in 1..=t_max {
            let value = whitney_hypergeometric(t)?;
            let oracle_checked = t <= oracle_limit;
            if oracle_checked {
                let ideals = Fence::new(2 * t as usize).count_ideals(t as usize)?;
                if BigInt::from(ideals) != value {
                    return Err(Error::WhitneyMismatch {
                        t,
                        series: value.to_string(),
                        ideals: ideals.to_string(),
                    });
                }
            }
            values.push(WhitneyEntry { t, value, oracle_checked });
        }
        Ok(Self { values })
    }
}

/// Trial-division primality test; ample for moduli below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
