//! Fixed-point arithmetic on big integers: a value is `mantissa * 2^-bits`.
//!
//! Addition is exact; multiplication and division round to the nearest
//! representable value, so each operation contributes at most one half-ulp
//! (`2^-(bits+1)`) of absolute error. This is the working precision used for
//! stiffness-matrix assembly, where terms of magnitude ~1e40 cancel down to
//! O(1) results.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Fx {
    mantissa: BigInt,
    bits: u32,
}

impl Fx {
    pub fn zero(bits: u32) -> Self {
        Fx { mantissa: BigInt::zero(), bits }
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        let scaled = r.numer() << bits;
        Fx { mantissa: div_round(&scaled, r.denom()), bits }
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        Fx { mantissa: BigInt::from(v) << bits, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn add(&self, other: &Fx) -> Fx {
        debug_assert_eq!(self.bits, other.bits);
        Fx { mantissa: &self.mantissa + &other.mantissa, bits: self.bits }
    }

    pub fn sub(&self, other: &Fx) -> Fx {
        debug_assert_eq!(self.bits, other.bits);
        Fx { mantissa: &self.mantissa - &other.mantissa, bits: self.bits }
    }

    pub fn neg(&self) -> Fx {
        Fx { mantissa: -&self.mantissa, bits: self.bits }
    }

    pub fn mul(&self, other: &Fx) -> Fx {
        debug_assert_eq!(self.bits, other.bits);
        let prod = &self.mantissa * &other.mantissa;
        Fx { mantissa: shift_round(prod, self.bits), bits: self.bits }
    }

    /// Multiply by an exact rational in a single rounding step.
    pub fn mul_rational(&self, r: &BigRational) -> Fx {
        let num = &self.mantissa * r.numer();
        Fx { mantissa: div_round(&num, r.denom()), bits: self.bits }
    }

    pub fn div(&self, other: &Fx) -> Fx {
        debug_assert_eq!(self.bits, other.bits);
        let scaled = &self.mantissa << self.bits;
        Fx { mantissa: div_round(&scaled, &other.mantissa), bits: self.bits }
    }

    /// Square root; the argument must be non-negative.
    pub fn sqrt(&self) -> Fx {
        assert!(!self.mantissa.is_negative(), "Fx::sqrt of negative value");
        let shifted: BigInt = &self.mantissa << self.bits;
        Fx { mantissa: shifted.sqrt(), bits: self.bits }
    }

    pub fn to_f64(&self) -> f64 {
        // Scale the mantissa down to <= 96 bits first so the conversion
        // cannot overflow the f64 exponent range prematurely.
        let nbits = self.mantissa.bits();
        if nbits <= 1000 {
            BigRational::new(self.mantissa.clone(), BigInt::from(1u32) << self.bits)
                .to_f64()
                .unwrap_or(f64::NAN)
        } else {
            let shift = (nbits - 96) as u32;
            let head: BigInt = &self.mantissa >> shift;
            let head = head.to_f64().unwrap_or(f64::NAN);
            head * 2f64.powi(shift as i32 - self.bits as i32)
        }
    }

    pub fn abs(&self) -> Fx {
        Fx { mantissa: self.mantissa.abs(), bits: self.bits }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }
}

/// Rounded division: nearest integer to `a / b` (ties away from zero).
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() >= b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Rounded right shift by `bits` (round half up in magnitude-agnostic form).
fn shift_round(v: BigInt, bits: u32) -> BigInt {
    let half: BigInt = BigInt::from(1u32) << (bits - 1);
    (v + half) >> bits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::big_ratio;

    #[test]
    fn roundtrip_and_arithmetic() {
        let bits = 128;
        let a = Fx::from_rational(&big_ratio(1, 3), bits);
        let b = Fx::from_rational(&big_ratio(3, 7), bits);
        let prod = a.mul(&b).to_f64();
        assert!((prod - 1.0 / 7.0).abs() < 1e-30);
        let q = a.div(&b).to_f64();
        assert!((q - 7.0 / 9.0).abs() < 1e-30);
        let s = Fx::from_i64(2, bits).sqrt().to_f64();
        assert!((s - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn division_rounds_to_nearest() {
        assert_eq!(div_round(&BigInt::from(7), &BigInt::from(2)), BigInt::from(4));
        assert_eq!(div_round(&BigInt::from(-7), &BigInt::from(2)), BigInt::from(-4));
        assert_eq!(div_round(&BigInt::from(6), &BigInt::from(4)), BigInt::from(2));
    }

    #[test]
    fn large_magnitude_to_f64() {
        let bits = 256;
        let mut v = Fx::from_i64(10, bits);
        for _ in 0..100 {
            v = v.mul(&Fx::from_i64(10, bits));
        }
        let f = v.to_f64();
        assert!((f.log10() - 101.0).abs() < 1e-9);
    }
}
