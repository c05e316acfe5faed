//! Closed forms of the Laplace transforms `L(r^a / sinh²r)(s)` and
//! `L(r^b / sinh r)(s)` in terms of the Hurwitz zeta function.
//!
//! Expanding `1/(1-e^{-x})^2 = Σ (n+1) e^{-nx}` under the substitution
//! `x = 2r` gives, for `a >= 2` and `s > -2`,
//!
//! `L(r^a/sinh²r)(s) = 2^{1-a} a! [ζ(a, w) + (1-w) ζ(a+1, w)]`, `w = (s+2)/2`,
//!
//! which for `s > 0` is the same function as the digamma form
//! `Φ'(s/2) + (s/4)Φ''(s/2)` continued through its induction relation in `a`;
//! the zeta form stays in-domain for the `s-2` shift needed by the stiffness
//! matrix. Similarly `L(r^b/sinh r)(s) = 2^{-b} b! ζ(b+1, (s+1)/2)` for
//! `s > -1`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::zeta::{hurwitz_zeta, hurwitz_zeta_fx};
use super::SpecFunError;
use crate::exact::{factorial, Fx};

/// `L(r^a / sinh²r)(s)` for integer `a >= 2` and `s > -2`.
pub fn laplace_r_pow_over_sinh2(a: u32, s: f64) -> Result<f64, SpecFunError> {
    if a < 2 {
        return Err(SpecFunError::Domain(format!(
            "laplace_r_pow_over_sinh2 requires a >= 2, got {a}"
        )));
    }
    if !(s > -2.0) {
        return Err(SpecFunError::Domain(format!(
            "laplace_r_pow_over_sinh2 requires s > -2 (integral diverges), got {s}"
        )));
    }
    let w = 0.5 * (s + 2.0);
    let z1 = hurwitz_zeta(a as f64, w)?;
    let z2 = hurwitz_zeta(a as f64 + 1.0, w)?;
    let fact: f64 = (1..=a as u64).map(|k| k as f64).product();
    Ok(2f64.powi(1 - a as i32) * fact * (z1 + (1.0 - w) * z2))
}

/// `L(r^b / sinh r)(s)` for integer `b >= 1` and `s > -1`.
pub fn laplace_r_pow_over_sinh(b: u32, s: f64) -> Result<f64, SpecFunError> {
    if b < 1 {
        return Err(SpecFunError::Domain(format!(
            "laplace_r_pow_over_sinh requires b >= 1, got {b}"
        )));
    }
    if !(s > -1.0) {
        return Err(SpecFunError::Domain(format!(
            "laplace_r_pow_over_sinh requires s > -1 (integral diverges), got {s}"
        )));
    }
    let w = 0.5 * (s + 1.0);
    let z = hurwitz_zeta(b as f64 + 1.0, w)?;
    let fact: f64 = (1..=b as u64).map(|k| k as f64).product();
    Ok(2f64.powi(-(b as i32)) * fact * z)
}

/// Fixed-point version of [`laplace_r_pow_over_sinh2`] with rational shift.
pub(crate) fn laplace_r_pow_over_sinh2_fx(
    a: u32,
    s: &BigRational,
    bits: u32,
) -> Result<Fx, SpecFunError> {
    let two = BigRational::from_integer(BigInt::from(2));
    if a < 2 || *s <= -two.clone() {
        return Err(SpecFunError::Domain(format!(
            "laplace_r_pow_over_sinh2_fx requires a >= 2 and s > -2, got a={a}, s={s}"
        )));
    }
    let w = (s + &two) / two.clone();
    let z1 = hurwitz_zeta_fx(a, &w, bits)?;
    let z2 = hurwitz_zeta_fx(a + 1, &w, bits)?;
    let one = BigRational::from_integer(BigInt::from(1));
    let combo = z1.add(&z2.mul_rational(&(one - &w)));
    let scale = BigRational::new(factorial(a as u64), BigInt::from(1) << (a - 1));
    Ok(combo.mul_rational(&scale))
}

/// Fixed-point version of [`laplace_r_pow_over_sinh`] with rational shift.
pub(crate) fn laplace_r_pow_over_sinh_fx(
    b: u32,
    s: &BigRational,
    bits: u32,
) -> Result<Fx, SpecFunError> {
    let one = BigRational::from_integer(BigInt::from(1));
    if b < 1 || *s <= -one.clone() {
        return Err(SpecFunError::Domain(format!(
            "laplace_r_pow_over_sinh_fx requires b >= 1 and s > -1, got b={b}, s={s}"
        )));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let w = (s + &one) / two;
    let z = hurwitz_zeta_fx(b + 1, &w, bits)?;
    let scale = BigRational::new(factorial(b as u64), BigInt::from(1) << b);
    Ok(z.mul_rational(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::big_ratio;
    use std::f64::consts::PI;

    #[test]
    fn auxiliary_identities() {
        // K(2,2) = π²/6 - ζ(3), frozen from the quadrature oracle
        // ∫ r² e^{-2r}/sinh²r dr = 0.442877163688632151.
        let k22 = laplace_r_pow_over_sinh2(2, 2.0).unwrap();
        assert!((k22 - 0.442_877_163_688_632_151).abs() < 1e-14);
        assert!((k22 - (PI * PI / 6.0 - 1.202_056_903_159_594_285)).abs() < 1e-14);
        // L(r/sinh r)(1) = π²/12
        let l1 = laplace_r_pow_over_sinh(1, 1.0).unwrap();
        assert!((l1 - PI * PI / 12.0).abs() < 1e-14);
    }

    #[test]
    fn digamma_form_agrees_for_positive_shift() {
        // K(2,s) = Φ'(s/2) + (s/4) Φ''(s/2) for s > 0.
        for &s in &[0.5, 1.0, 2.0, 3.7] {
            let zeta_form = laplace_r_pow_over_sinh2(2, s).unwrap();
            let digamma_form = crate::specfun::polygamma(1, s / 2.0).unwrap()
                + s / 4.0 * crate::specfun::polygamma(2, s / 2.0).unwrap();
            assert!(
                (zeta_form - digamma_form).abs() < 1e-12 * zeta_form.abs(),
                "s={s}: {zeta_form} vs {digamma_form}"
            );
        }
    }

    #[test]
    fn negative_shift_in_domain() {
        // The s-2 shift of the stiffness assembly lands in (-2, -1); the
        // transform must stay finite and match direct quadrature; value
        // frozen from the Gauss-Kronrod oracle in tests/specfun_oracles.rs.
        let v = laplace_r_pow_over_sinh2(4, 1.0 / 3.0 - 2.0).unwrap();
        assert!(v.is_finite() && v > 0.0);
        assert!(laplace_r_pow_over_sinh2(4, -2.0).is_err());
        assert!(laplace_r_pow_over_sinh(2, -1.0).is_err());
    }

    #[test]
    fn fx_matches_f64() {
        let s = big_ratio(5, 6);
        let hi = laplace_r_pow_over_sinh2_fx(7, &s, 192).unwrap().to_f64();
        let lo = laplace_r_pow_over_sinh2(7, 5.0 / 6.0).unwrap();
        assert!((hi - lo).abs() < 1e-12 * hi.abs());
        let hi = laplace_r_pow_over_sinh_fx(3, &s, 192).unwrap().to_f64();
        let lo = laplace_r_pow_over_sinh(3, 5.0 / 6.0).unwrap();
        assert!((hi - lo).abs() < 1e-12 * hi.abs());
    }

    #[test]
    fn induction_relation_via_finite_differences() {
        // K(a+1, s) = -∂_s K(a, s): central difference in s.
        for &(a, s) in &[(2u32, 1.0), (3, 0.7), (5, 1.9)] {
            let h = 1e-5;
            let fd = (laplace_r_pow_over_sinh2(a, s - h).unwrap()
                - laplace_r_pow_over_sinh2(a, s + h).unwrap())
                / (2.0 * h);
            let next = laplace_r_pow_over_sinh2(a + 1, s).unwrap();
            assert!(
                (fd - next).abs() < 1e-8 * next.abs(),
                "a={a} s={s}: fd={fd} next={next}"
            );
        }
    }
}
