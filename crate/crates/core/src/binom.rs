//! Binomial coefficients with the integer-argument convention used by every
//! determinant and closed-form formula in this crate.
//!
//! `binomial(n, k)` is the generalized coefficient `n (n-1) ... (n-k+1) / k!`:
//!
//! * `k < 0` gives 0,
//! * `k = 0` gives 1 for every `n`, negative included,
//! * `0 <= n < k` gives 0,
//! * `n < 0 < k` gives `(-1)^k C(k-n-1, k)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && n < k {
        return BigInt::zero();
    }
    // Symmetry keeps the loop short for nonnegative n.
    let k = if n >= 0 && k > n - k { n - k } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so acc * (n - i) is divisible by i + 1.
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient as an `i64`, for small arguments in tests and table
/// construction. Panics on overflow.
pub fn binomial_i64(n: i64, k: i64) -> i64 {
    i64::try_from(binomial(n, k)).expect("binomial coefficient overflows i64")
}
