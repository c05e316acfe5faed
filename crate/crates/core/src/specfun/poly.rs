//! Polynomials with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// A polynomial stored as exact rational coefficients, constant term first.
///
/// The coefficient list keeps no trailing zeros, so the leading coefficient is
/// nonzero unless the polynomial is identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialCoeffs {
    coeffs: Vec<BigRational>,
}

impl PolynomialCoeffs {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolynomialCoeffs { coeffs }
    }

    pub fn zero() -> Self {
        PolynomialCoeffs { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Divide by `x^k`; panics if any of the lowest `k` coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(
            self.coeffs.iter().take(k).all(|c| c.is_zero()),
            "shift_down would truncate nonzero low-order coefficients"
        );
        if self.coeffs.len() <= k {
            return Self::zero();
        }
        Self::new(self.coeffs[k..].to_vec())
    }

    /// Substitute `x -> t*x` for rational `t`.
    pub fn substitute_scaled(&self, t: &BigRational) -> Self {
        let mut power = BigRational::from_integer(BigInt::from(1));
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &power;
                power = &power * t;
                out
            })
            .collect();
        Self::new(coeffs)
    }
}
