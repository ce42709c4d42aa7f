//! Arbitrary-precision counting arithmetic.
//!
//! Every count produced by this crate is exact. Closed forms that divide
//! (such as `C(k+l,l) * (k-al+1) / (k+1)`) go through [`exact_div`], which
//! panics if the division ever leaves a remainder.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact nonnegative count.
pub type BigCount = BigUint;

/// Binomial coefficient under the lattice-counting convention:
/// zero whenever `n < 0`, `k < 0`, or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigCount {
    if n < 0 || k < 0 || k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut res = BigCount::one();
    // res stays integral: after multiplying by (n-i) it is divisible by i+1.
    for i in 0..k {
        res = res * (n - i) / (i + 1);
    }
    res
}

/// The `n`-th Catalan number `C(2n,n) / (n+1)`.
pub fn catalan(n: u64) -> BigCount {
    let n = n as i64;
    exact_div(binomial(2 * n, n), &BigCount::from((n + 1) as u64))
}

/// Quotient of a division that must be exact.
///
/// Panics on a nonzero remainder; the closed forms calling this are only
/// evaluated inside their hypotheses, where divisibility is guaranteed.
pub fn exact_div(num: BigCount, den: &BigCount) -> BigCount {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division: {} / {}", q, den);
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(9, 2), BigCount::from(36u32));
        assert_eq!(binomial(4, -1), BigCount::zero());
        assert_eq!(binomial(0, 0), BigCount::one());
        assert_eq!(binomial(-1, 0), BigCount::zero());
        assert_eq!(binomial(5, 7), BigCount::zero());
        assert_eq!(binomial(10, 5), BigCount::from(252u32));
    }

    #[test]
    fn binomial_matches_pascal_recurrence() {
        for n in 1..40i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn catalan_small_values() {
        assert_eq!(catalan(0), BigCount::one());
        assert_eq!(catalan(3), BigCount::from(5u32));
        assert_eq!(catalan(5), BigCount::from(42u32));
    }

    #[test]
    fn catalan_matches_segner_recurrence() {
        // C_{n+1} = sum_i C_i * C_{n-i}, an independent route to the values.
        for n in 0..12u64 {
            let direct = catalan(n + 1);
            let mut conv = BigCount::zero();
            for i in 0..=n {
                conv += catalan(i) * catalan(n - i);
            }
            assert_eq!(direct, conv);
        }
    }

    #[test]
    #[should_panic(expected = "inexact division")]
    fn exact_div_rejects_remainders() {
        exact_div(BigCount::from(7u32), &BigCount::from(2u32));
    }
}
