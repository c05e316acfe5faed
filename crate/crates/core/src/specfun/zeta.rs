//! Hurwitz zeta, digamma and polygamma via Euler-Maclaurin summation.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::SpecFunError;
use crate::exact::{bernoulli_even, factorial, Fx};

/// `B_{2k} / (2k)!` as `f64`, for the Euler-Maclaurin tail.
fn b2k_over_fact(k: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        (0..=24)
            .map(|k| {
                let b = bernoulli_even(k);
                let f = BigRational::from_integer(factorial(2 * k as u64));
                (b / f).to_f64().unwrap()
            })
            .collect()
    });
    t[k]
}

/// Hurwitz zeta `ζ(q, w) = Σ_{n>=0} (n+w)^{-q}` for `q > 1`, `w > 0`.
pub fn hurwitz_zeta(q: f64, w: f64) -> Result<f64, SpecFunError> {
    if !(q > 1.0) {
        return Err(SpecFunError::Domain(format!(
            "hurwitz_zeta requires q > 1 (series diverges), got q = {q}"
        )));
    }
    if !(w > 0.0) {
        return Err(SpecFunError::Domain(format!(
            "hurwitz_zeta requires w > 0, got w = {w}"
        )));
    }
    // Leading sum up to x = N + w large enough that the Bernoulli tail
    // converges rapidly even for large q.
    let x_min = 25.0_f64.max(0.75 * q);
    let n_lead = ((x_min - w).ceil().max(0.0)) as usize;
    let mut lead = 0.0;
    for n in (0..n_lead).rev() {
        lead += (n as f64 + w).powf(-q);
    }
    let x = n_lead as f64 + w;
    let mut acc = x.powf(1.0 - q) / (q - 1.0) + 0.5 * x.powf(-q);
    let x2 = x * x;
    let mut rising = q; // (q)_{2k-1} at k = 1
    let mut xpow = x.powf(-q - 1.0);
    let mut prev = f64::INFINITY;
    for k in 1..=16 {
        let term = b2k_over_fact(k) * rising * xpow;
        if term.abs() >= prev {
            break;
        }
        acc += term;
        prev = term.abs();
        if term.abs() < 1e-18 * acc.abs() {
            break;
        }
        rising *= (q + 2.0 * k as f64 - 1.0) * (q + 2.0 * k as f64);
        xpow /= x2;
    }
    Ok(lead + acc)
}

/// Digamma `ψ(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) {
        return Err(SpecFunError::Domain(format!(
            "digamma requires x > 0, got {x}"
        )));
    }
    let mut x = x;
    let mut acc = 0.0;
    while x < 16.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut result = x.ln() - 0.5 / x;
    let mut pow = inv2;
    for k in 1..=8 {
        result -= b2k_over_fact(k) * fact_f64(2 * k) / (2.0 * k as f64) * pow;
        pow *= inv2;
    }
    Ok(acc + result)
}

fn fact_f64(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Polygamma `ψ^{(m)}(x)` for `x > 0`.
///
/// Orders `m >= 1` use `ψ^{(m)}(x) = (-1)^{m+1} m! ζ(m+1, x)`.
pub fn polygamma(order: u32, x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) {
        return Err(SpecFunError::Domain(format!(
            "polygamma requires x > 0, got {x}"
        )));
    }
    if order == 0 {
        return digamma(x);
    }
    if order > 120 {
        return Err(SpecFunError::Domain(format!(
            "polygamma order {order} exceeds the supported range (<= 120)"
        )));
    }
    let zeta = hurwitz_zeta(order as f64 + 1.0, x)?;
    let sign = if order % 2 == 0 { -1.0 } else { 1.0 };
    Ok(sign * fact_f64(order as usize) * zeta)
}

/// Hurwitz zeta at integer `q >= 2` and rational `w > 0`, in fixed-point
/// arithmetic. Every Euler-Maclaurin term is an exact rational rounded once
/// into the accumulator, so the result is accurate to a few ulps of the
/// working precision.
pub(crate) fn hurwitz_zeta_fx(q: u32, w: &BigRational, bits: u32) -> Result<Fx, SpecFunError> {
    if q < 2 {
        return Err(SpecFunError::Domain(format!(
            "hurwitz_zeta_fx requires integer q >= 2, got {q}"
        )));
    }
    if !w.is_positive() {
        return Err(SpecFunError::Domain(format!(
            "hurwitz_zeta_fx requires w > 0, got {w}"
        )));
    }
    const K_TAIL: usize = 18;
    let wf = w.to_f64().unwrap();
    let qf = q as f64;
    // Choose the split point so the first omitted Bernoulli term is below the
    // target precision; everything is estimated in log2.
    let target = -((bits as f64) + 16.0);
    let mut n_lead = 16usize.max((qf * 0.6) as usize);
    loop {
        let x = n_lead as f64 + wf;
        let k2 = 2.0 * (K_TAIL + 1) as f64;
        // log2 |B_{2K+2}/(2K+2)!| ≈ log2(2 / (2π)^{2K+2})
        let log_b = 1.0 - k2 * (2.0 * std::f64::consts::PI).log2();
        let log_rising: f64 = (0..(k2 as usize - 1))
            .map(|i| (qf + i as f64).log2())
            .sum();
        let log_term = log_b + log_rising - (qf + k2 - 1.0) * x.log2();
        if log_term < target {
            break;
        }
        n_lead *= 2;
        if n_lead > 1 << 22 {
            return Err(SpecFunError::NonConvergence(
                "hurwitz_zeta_fx: leading sum grew unreasonably".into(),
            ));
        }
    }

    let p = w.numer().clone();
    let d = w.denom().clone();
    let d_pow_q = d.clone().pow(q);
    let mut acc = Fx::zero(bits);
    for n in 0..n_lead {
        let base = &p + &d * BigInt::from(n);
        let term = BigRational::new(d_pow_q.clone(), base.pow(q));
        acc = acc.add(&Fx::from_rational(&term, bits));
    }
    // x = N + w as an exact rational
    let x = BigRational::new(&p + &d * BigInt::from(n_lead), d.clone());
    let x_inv = x.recip();
    let x_inv_q = pow_rational(&x_inv, q);
    // x^{1-q}/(q-1)
    let t1 = pow_rational(&x_inv, q - 1) / BigRational::from_integer(BigInt::from(q - 1));
    acc = acc.add(&Fx::from_rational(&t1, bits));
    // x^{-q}/2
    acc = acc.add(&Fx::from_rational(&(&x_inv_q / BigRational::from_integer(BigInt::from(2))), bits));
    // Bernoulli corrections; rise_int tracks the rising factorial (q)_{2k-1}
    let x_inv2 = &x_inv * &x_inv;
    let mut xpow = &x_inv_q * &x_inv;
    let mut rise_int = BigInt::from(q);
    for k in 1..=K_TAIL {
        let coeff = bernoulli_even(k) / BigRational::from_integer(factorial(2 * k as u64));
        let term = coeff * BigRational::from_integer(rise_int.clone()) * &xpow;
        acc = acc.add(&Fx::from_rational(&term, bits));
        rise_int *= BigInt::from(q as u64 + 2 * k as u64 - 1);
        rise_int *= BigInt::from(q as u64 + 2 * k as u64);
        xpow = &xpow * &x_inv2;
    }
    Ok(acc)
}

fn pow_rational(r: &BigRational, e: u32) -> BigRational {
    BigRational::new(r.numer().clone().pow(e), r.denom().clone().pow(e))
}
