//! Exact-rational and fixed-point big-integer arithmetic used by the
//! Galerkin matrix assembly, where monomial coefficients grow combinatorially
//! and floating-point summation loses all significant digits well before the
//! basis dimensions needed here.

mod bernoulli;
mod fixed;

pub(crate) use bernoulli::bernoulli_even;
pub(crate) use fixed::Fx;

use num_bigint::BigInt;
use num_rational::BigRational;

/// `n!` as an exact integer.
pub(crate) fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::from(1u32);
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub(crate) fn big_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
