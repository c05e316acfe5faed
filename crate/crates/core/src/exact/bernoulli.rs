//! Exact Bernoulli numbers, used by the Euler-Maclaurin tail of the Hurwitz
//! zeta function.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::binomial;

const MAX_INDEX: usize = 64;

/// `B_{2k}` for `2k <= 64`, computed once by the defining recurrence
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0` with `B_0 = 1`.
pub(crate) fn bernoulli_even(k: usize) -> &'static BigRational {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut b = vec![BigRational::zero(); MAX_INDEX + 1];
        b[0] = BigRational::one();
        for m in 1..=MAX_INDEX {
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate().take(m) {
                if !bj.is_zero() {
                    acc += BigRational::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
                }
            }
            b[m] = -acc / BigRational::from_integer(BigInt::from(m + 1));
        }
        (0..=MAX_INDEX / 2).map(|i| b[2 * i].clone()).collect()
    });
    &table[k]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::big_ratio;

    #[test]
    fn known_values() {
        assert_eq!(*bernoulli_even(0), big_ratio(1, 1));
        assert_eq!(*bernoulli_even(1), big_ratio(1, 6));
        assert_eq!(*bernoulli_even(2), big_ratio(-1, 30));
        assert_eq!(*bernoulli_even(3), big_ratio(1, 42));
        assert_eq!(*bernoulli_even(4), big_ratio(-1, 30));
        assert_eq!(*bernoulli_even(5), big_ratio(5, 66));
        assert_eq!(*bernoulli_even(6), big_ratio(-691, 2730));
    }
}
