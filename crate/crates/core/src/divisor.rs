//! Divisor statistics, pentagonal signs and big-integer count tables.
//!
//! All square-root comparisons are exact: a divisor `d` is compared against
//! `sqrt(2n)` by comparing `d*d` with `2n` in integer arithmetic, so no
//! boundary can be misjudged. (An odd `d` can never satisfy `d*d = 2n`.)

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Divisor data for one integer, with the odd divisors split at `sqrt(2n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorStats {
    pub n: u64,
    /// Number of divisors of `n`.
    pub count: u64,
    /// Sum of divisors of `n`.
    pub sigma: u64,
    /// Largest odd divisor of `n`.
    pub odd_part: u64,
    /// Odd divisors `d` with `d*d < 2n`.
    pub below: u64,
    /// Odd divisors `d` with `d*d > 2n`.
    pub above: u64,
}

impl DivisorStats {
    /// Number of odd divisors, i.e. divisors of the odd part.
    pub fn odd_count(&self) -> u64 {
        self.below + self.above
    }
}

/// Trial-division factorization, smallest primes first.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut exp = 0u32;
            while n % p == 0 {
                n /= p;
                exp += 1;
            }
            factors.push((p, exp));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// Compute [`DivisorStats`] for `n >= 1`.
pub fn divisor_stats(n: u64) -> Result<DivisorStats> {
    if n == 0 {
        return Err(Error::InvalidInput("divisor stats need n >= 1"));
    }
    let factors = factorize(n);
    let mut count = 1u64;
    let mut sigma = 1u64;
    let mut odd_part = 1u64;
    for &(p, e) in &factors {
        count *= e as u64 + 1;
        let mut power_sum = 1u64;
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            power_sum += pk;
        }
        sigma *= power_sum;
        if p != 2 {
            odd_part *= pk;
        }
    }

    // Enumerate the divisors of the odd part and split them at sqrt(2n).
    let odd_factors: Vec<(u64, u32)> = factors.into_iter().filter(|&(p, _)| p != 2).collect();
    let mut below = 0u64;
    let mut above = 0u64;
    let mut stack = vec![(1u64, 0usize)];
    while let Some((d, i)) = stack.pop() {
        if i == odd_factors.len() {
            if (d as u128) * (d as u128) < 2 * n as u128 {
                below += 1;
            } else {
                above += 1;
            }
            continue;
        }
        let (p, e) = odd_factors[i];
        let mut pk = 1u64;
        for _ in 0..=e {
            stack.push((d * pk, i + 1));
            pk *= p;
        }
    }
    Ok(DivisorStats { n, count, sigma, odd_part, below, above })
}

/// Number of odd divisors of `n`.
pub fn odd_divisor_count(n: u64) -> u64 {
    let mut m = n;
    while m % 2 == 0 {
        m /= 2;
    }
    factorize(m).iter().map(|&(_, e)| e as u64 + 1).product()
}

/// `(-1)^k` when `n = k(3k-1)/2` for some integer `k` (positive, negative or
/// zero), and `0` otherwise. Equivalently: the coefficient of `q^n` in the
/// product of `(1 - q^j)` over all `j >= 1`.
pub fn pentagonal_sign(n: u64) -> i8 {
    // n = k(3k-1)/2  <=>  24n + 1 = (6k - 1)^2.
    let disc = 24 * n + 1;
    let root = disc.isqrt();
    if root * root != disc {
        return 0;
    }
    // 6k - 1 = root gives the positive-index solutions (k = 0 included via
    // root = 1 taken with the minus sign below); 6k - 1 = -root the rest.
    if (1 + root) % 6 == 0 {
        let k = (1 + root) / 6;
        return if k % 2 == 0 { 1 } else { -1 };
    }
    if root >= 1 && (root - 1) % 6 == 0 {
        // 1 - root = 6k with k <= 0; parity of |k| decides the sign.
        let k = (root - 1) / 6;
        return if k % 2 == 0 { 1 } else { -1 };
    }
    0
}

/// `k(k+1)/2`.
pub fn triangular(k: u64) -> u64 {
    k * (k + 1) / 2
}

/// An exact integer sequence indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: String,
    values: Vec<BigUint>,
}

impl SequenceTable {
    pub fn new(name: impl Into<String>, values: Vec<BigUint>) -> Self {
        SequenceTable { name: name.into(), values }
    }

    /// Largest index stored.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// Table of the unrestricted partition counts `p(0..=max)` by the classic
/// part-by-part dynamic program (deliberately not the pentagonal recurrence,
/// which this table is used to check).
pub fn partition_count_table(max: usize) -> SequenceTable {
    let mut c = vec![BigUint::zero(); max + 1];
    c[0] = BigUint::one();
    for part in 1..=max {
        for j in part..=max {
            let add = c[j - part].clone();
            c[j] += add;
        }
    }
    SequenceTable::new("p", c)
}

/// Table of the distinct-part partition counts `p_d(0..=max)` by the 0/1
/// dynamic program (each part used at most once).
pub fn distinct_count_table(max: usize) -> SequenceTable {
    let mut c = vec![BigUint::zero(); max + 1];
    c[0] = BigUint::one();
    for part in 1..=max {
        for j in (part..=max).rev() {
            let add = c[j - part].clone();
            c[j] += add;
        }
    }
    SequenceTable::new("pd", c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn stats_examples() {
        let s = divisor_stats(9).unwrap();
        assert_eq!(s, DivisorStats { n: 9, count: 3, sigma: 13, odd_part: 9, below: 2, above: 1 });
        let s = divisor_stats(8).unwrap();
        assert_eq!(s, DivisorStats { n: 8, count: 4, sigma: 15, odd_part: 1, below: 1, above: 0 });
        let s = divisor_stats(1).unwrap();
        assert_eq!(s, DivisorStats { n: 1, count: 1, sigma: 1, odd_part: 1, below: 1, above: 0 });
        assert!(divisor_stats(0).is_err());
    }

    #[test]
    fn split_counts_cover_all_odd_divisors() {
        for n in 1..=10_000u64 {
            let s = divisor_stats(n).unwrap();
            assert_eq!(s.odd_count(), odd_divisor_count(n), "n={n}");
            assert_eq!(n % s.odd_part, 0);
            assert!(s.odd_part % 2 == 1);
            let mut cofactor = n / s.odd_part;
            while cofactor % 2 == 0 {
                cofactor /= 2;
            }
            assert_eq!(cofactor, 1, "odd part must absorb every odd prime");
        }
    }

    #[test]
    fn sigma_splits_at_the_odd_part() {
        // sigma(2^b * m) = (2^(b+1) - 1) * sigma(m) for odd m.
        for n in 1..=10_000u64 {
            let s = divisor_stats(n).unwrap();
            let b = (n / s.odd_part).trailing_zeros();
            let sigma_m = divisor_stats(s.odd_part).unwrap().sigma;
            assert_eq!(s.sigma, ((1u64 << (b + 1)) - 1) * sigma_m, "n={n}");
        }
    }

    #[test]
    fn pentagonal_sign_examples() {
        assert_eq!(pentagonal_sign(0), 1);
        assert_eq!(pentagonal_sign(1), -1);
        assert_eq!(pentagonal_sign(2), -1);
        assert_eq!(pentagonal_sign(3), 0);
        assert_eq!(pentagonal_sign(4), 0);
        assert_eq!(pentagonal_sign(5), 1);
        assert_eq!(pentagonal_sign(7), 1);
        assert_eq!(pentagonal_sign(12), -1);
        assert_eq!(pentagonal_sign(15), -1);
    }

    #[test]
    fn pentagonal_sign_matches_direct_search() {
        // Direct evaluation of k(3k-1)/2 over both signs of k.
        let max = 5_000i64;
        let mut expected = vec![0i8; max as usize + 1];
        let mut k = -200i64;
        while k <= 200 {
            let g = k * (3 * k - 1) / 2;
            if (0..=max).contains(&g) {
                expected[g as usize] = if k.rem_euclid(2) == 0 { 1 } else { -1 };
            }
            k += 1;
        }
        for n in 0..=max as u64 {
            assert_eq!(pentagonal_sign(n), expected[n as usize], "n={n}");
        }
    }

    #[test]
    fn pentagonal_nonzero_density() {
        let max = 2000u64;
        let nonzeros = (0..=max).filter(|&n| pentagonal_sign(n) != 0).count() as f64;
        let predicted = 2.0 * libm::sqrt(2.0 * max as f64 / 3.0);
        assert!((nonzeros - predicted).abs() <= 3.0, "{nonzeros} vs {predicted}");
    }

    #[test]
    fn triangular_values() {
        assert_eq!(triangular(0), 0);
        assert_eq!(triangular(2), 3);
        assert_eq!(triangular(4), 10);
    }

    #[test]
    fn partition_table_small_values() {
        let t = partition_count_table(10);
        let got: Vec<u64> = t.values().iter().map(|v| v.to_u64().unwrap()).collect();
        assert_eq!(got[..6], [1, 1, 2, 3, 5, 7]);
        assert_eq!(got[10], 42);
        assert_eq!(partition_count_table(0).values(), &[BigUint::one()]);
    }

    #[test]
    fn distinct_table_values() {
        let t = distinct_count_table(100);
        assert_eq!(t.get(0).to_u64().unwrap(), 1);
        assert_eq!(t.get(7).to_u64().unwrap(), 5);
        assert_eq!(t.get(100).to_u64().unwrap(), 444_793);
    }

    #[test]
    fn distinct_table_matches_enumeration() {
        let t = distinct_count_table(40);
        for n in 1..=40u64 {
            let listed = crate::partition::enumerate_distinct(n).unwrap().len() as u64;
            assert_eq!(t.get(n as usize).to_u64().unwrap(), listed, "n={n}");
        }
    }
}
