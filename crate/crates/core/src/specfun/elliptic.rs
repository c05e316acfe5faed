//! Complete elliptic integrals by arithmetic-geometric-mean iteration.

use super::SpecFunError;

const MAX_AGM_ITER: usize = 64;

/// Complete elliptic integral of the first kind,
/// `K(k) = ∫_0^{π/2} dτ / sqrt(1 - k² sin²τ)`, for modulus `0 <= k < 1`.
pub fn elliptic_k(k: f64) -> Result<f64, SpecFunError> {
    if !(0.0..1.0).contains(&k) {
        return Err(SpecFunError::Domain(format!(
            "elliptic_k requires 0 <= k < 1 (K diverges at k = 1), got {k}"
        )));
    }
    let kp = (1.0 - k * k).sqrt();
    let mut a = 1.0_f64;
    let mut b = kp;
    for _ in 0..MAX_AGM_ITER {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Ok(std::f64::consts::FRAC_PI_2 / a)
}

/// Complete elliptic integral of the second kind,
/// `E(k) = ∫_0^{π/2} sqrt(1 - k² sin²τ) dτ`, for modulus `0 <= k <= 1`.
pub fn elliptic_e(k: f64) -> Result<f64, SpecFunError> {
    if !(0.0..=1.0).contains(&k) {
        return Err(SpecFunError::Domain(format!(
            "elliptic_e requires 0 <= k <= 1, got {k}"
        )));
    }
    if k == 1.0 {
        return Ok(1.0);
    }
    let kp = (1.0 - k * k).sqrt();
    let mut a = 1.0_f64;
    let mut b = kp;
    let mut c = k;
    let mut csum = 0.5 * c * c;
    let mut pow2 = 1.0;
    for _ in 0..MAX_AGM_ITER {
        if c.abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = (a * b).sqrt();
        a = an;
        pow2 *= 2.0;
        csum += 0.5 * pow2 * c * c;
    }
    let kk = std::f64::consts::FRAC_PI_2 / a;
    Ok(kk * (1.0 - csum))
}

/// `dK/dk = (E(k) - (1-k²) K(k)) / (k (1-k²))`.
///
/// A power series is used below `k = 0.01`, where the closed form loses
/// digits to cancellation inside `E - K`.
pub fn elliptic_k_derivative(k: f64) -> Result<f64, SpecFunError> {
    if !(0.0..1.0).contains(&k) {
        return Err(SpecFunError::Domain(format!(
            "elliptic_k_derivative requires 0 <= k < 1, got {k}"
        )));
    }
    if k < 0.01 {
        // K = (π/2) Σ a_n k^{2n},  a_n = ((2n-1)!!/(2n)!!)²
        let mut a_n = 1.0;
        let mut deriv = 0.0;
        let k2 = k * k;
        let mut k_pow = k; // k^{2n-1} at term n
        for n in 1..=8_u32 {
            let r = (2.0 * n as f64 - 1.0) / (2.0 * n as f64);
            a_n *= r * r;
            deriv += a_n * (2.0 * n as f64) * k_pow;
            k_pow *= k2;
        }
        return Ok(std::f64::consts::FRAC_PI_2 * deriv);
    }
    let kk = elliptic_k(k)?;
    let ee = elliptic_e(k)?;
    let kp2 = 1.0 - k * k;
    Ok((ee - kp2 * kk) / (k * kp2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn trivial_endpoints() {
        assert!((elliptic_k(0.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((elliptic_e(0.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(elliptic_e(1.0).unwrap(), 1.0);
        assert!(elliptic_k(1.0).is_err());
        assert!(elliptic_e(1.5).is_err());
    }

    // Frozen from an adaptive-quadrature oracle of the defining integrals
    // (verified again in tests/specfun_oracles.rs).
    #[test]
    fn frozen_midpoint_values() {
        assert!((elliptic_k(0.5).unwrap() - 1.685_750_354_812_596_04).abs() < 1e-14);
        assert!((elliptic_e(0.5).unwrap() - 1.467_462_209_339_427_155).abs() < 1e-14);
    }

    #[test]
    fn derivative_matches_central_difference() {
        for &k in &[0.02, 0.3, 0.6, 0.9] {
            let h = 1e-6;
            let fd = (elliptic_k(k + h).unwrap() - elliptic_k(k - h).unwrap()) / (2.0 * h);
            let an = elliptic_k_derivative(k).unwrap();
            assert!(
                (fd - an).abs() < 1e-7 * an.abs().max(1.0),
                "k={k}: fd={fd}, analytic={an}"
            );
        }
    }

    #[test]
    fn derivative_series_branch_consistent() {
        // A central difference of K spanning the series switch at k = 0.01
        // must agree with the value there.
        let h = 1e-4;
        let fd = (elliptic_k(0.01 + h).unwrap() - elliptic_k(0.01 - h).unwrap()) / (2.0 * h);
        let mid = elliptic_k_derivative(0.01).unwrap();
        assert!((fd - mid).abs() < 1e-8, "fd={fd}, mid={mid}");
        let lo = elliptic_k_derivative(0.0099).unwrap();
        let hi = elliptic_k_derivative(0.0101).unwrap();
        assert!(lo < mid && mid < hi);
        assert_eq!(elliptic_k_derivative(0.0).unwrap(), 0.0);
    }
}
