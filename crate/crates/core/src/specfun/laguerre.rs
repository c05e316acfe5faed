//! The Laguerre-polynomial convention used by the Coulomb basis.
//!
//! Here `L_k(r) = e^r d^k/dr^k (r^k e^{-r})`, which is `k!` times the usual
//! normalisation, and the associated polynomial is
//! `L^N_k(r) = (-1)^N d^N/dr^N L_{k+N}(r)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::PolynomialCoeffs;
use crate::exact::{binomial, factorial};

/// Coefficients of `L^N_k` in the convention above, exact.
pub fn laguerre_paper(k: u32, n: u32) -> PolynomialCoeffs {
    let order = (k + n) as u64;
    // L_{k+N}(r) = sum_j (-1)^j (k+N)! C(k+N, j) / j!  r^j
    let fact = factorial(order);
    let mut coeffs: Vec<BigRational> = (0..=order)
        .map(|j| {
            let mut c = BigRational::new(&fact * binomial(order, j), factorial(j));
            if j % 2 == 1 {
                c = -c;
            }
            c
        })
        .collect();
    // (-1)^N d^N/dr^N
    for _ in 0..n {
        coeffs = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * BigRational::from_integer(BigInt::from(j)))
            .collect();
    }
    let mut p = PolynomialCoeffs::new(coeffs);
    if n % 2 == 1 {
        p = p.scale(&BigRational::from_integer(BigInt::from(-1)));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::big_ratio;

    #[test]
    fn low_order_values() {
        // L_0 = 1
        assert_eq!(laguerre_paper(0, 0), PolynomialCoeffs::new(vec![big_ratio(1, 1)]));
        // L_1 = 1 - r  (derived by symbolic differentiation of e^r d/dr(r e^{-r}))
        assert_eq!(
            laguerre_paper(1, 0),
            PolynomialCoeffs::new(vec![big_ratio(1, 1), big_ratio(-1, 1)])
        );
        // L^3_0 = (-1)^3 d^3/dr^3 L_3, with L_3 = -r^3 + 9r^2 - 18r + 6, is the constant 6.
        assert_eq!(laguerre_paper(0, 3), PolynomialCoeffs::new(vec![big_ratio(6, 1)]));
    }

    #[test]
    fn l3_matches_rodrigues() {
        assert_eq!(
            laguerre_paper(3, 0),
            PolynomialCoeffs::new(vec![
                big_ratio(6, 1),
                big_ratio(-18, 1),
                big_ratio(9, 1),
                big_ratio(-1, 1),
            ])
        );
    }
}
