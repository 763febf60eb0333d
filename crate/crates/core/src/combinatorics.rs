//! Exact binomial coefficients and factorials.

use num_bigint::BigInt;
use num_traits::One;

/// Binomial coefficient C(n, k) as an exact integer; 0 when k > n.
///
/// Computed by the multiplicative formula, which divides exactly at every
/// step because each prefix product C(n, i) is an integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0u32);
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 1..=k {
        c = c * BigInt::from(n - k + i) / BigInt::from(i);
    }
    c
}

/// n! as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}
