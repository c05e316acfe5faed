//! Quadrature-based spectral witnesses: the Hardy-inequality lower bound on
//! the quadratic form (semi-boundedness) and the scaled-bump certificate for
//! infinitely many eigenvalues below the essential spectrum.

use super::{HalflineError, PotentialProfile};
use crate::quad;

const QUAD_ABS_TOL: f64 = 1e-10;
const QUAD_REL_TOL: f64 = 1e-10;

/// The smooth bump `exp(-1/((x-a)(b-x)))` on `(a, b)`, normalised to unit
/// L² norm.
#[derive(Debug, Clone, Copy)]
pub struct BumpFunction {
    a: f64,
    b: f64,
    inv_norm: f64,
}

impl BumpFunction {
    pub fn new(a: f64, b: f64) -> Result<Self, HalflineError> {
        if !(a.is_finite() && b.is_finite() && a > 0.0 && b > a) {
            return Err(HalflineError::InvalidInput(format!(
                "bump support ({a}, {b}) must satisfy 0 < a < b"
            )));
        }
        let mut bump = BumpFunction { a, b, inv_norm: 1.0 };
        let nn = quad::integrate(|x| bump.eval(x).powi(2), a, b, QUAD_ABS_TOL, QUAD_REL_TOL)?;
        bump.inv_norm = 1.0 / nn.value.sqrt();
        Ok(bump)
    }

    /// The default seed on `(1, 2)`.
    pub fn standard_seed() -> Self {
        Self::new(1.0, 2.0).expect("standard seed bump is well defined")
    }

    pub fn support(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let g = (x - self.a) * (self.b - x);
        if g <= 0.0 {
            0.0
        } else {
            self.inv_norm * (-1.0 / g).exp()
        }
    }

    pub fn deriv(&self, x: f64) -> f64 {
        let g = (x - self.a) * (self.b - x);
        if g <= 0.0 {
            0.0
        } else {
            let gp = self.a + self.b - 2.0 * x;
            self.inv_norm * (-1.0 / g).exp() * gp / (g * g)
        }
    }
}

/// Rayleigh quotients of a family of test functions and the Hardy bound they
/// must respect.
#[derive(Debug, Clone)]
pub struct HardyReport {
    /// `⟨Hu,u⟩ / ⟨u,u⟩` per test function.
    pub quotients: Vec<f64>,
    pub min_quotient: f64,
    /// Numerical infimum of `W = V - c₂/ρ²`.
    pub inf_w: f64,
}

/// Evaluate the quadratic form on each compactly supported test function and
/// check the Lemma-1 lower bound `⟨Hu,u⟩/⟨u,u⟩ >= inf W`.
pub fn hardy_witness(
    profile: &PotentialProfile,
    test_functions: &[BumpFunction],
) -> Result<HardyReport, HalflineError> {
    if profile.asymptotics.c2 < -0.25 - 1e-12 {
        return Err(HalflineError::HypothesisViolated(format!(
            "hardy_witness requires c2 >= -1/4, got {}",
            profile.asymptotics.c2
        )));
    }
    if test_functions.is_empty() {
        return Err(HalflineError::InvalidInput("empty test family".into()));
    }
    let mut quotients = Vec::with_capacity(test_functions.len());
    let mut far_end = 0.0f64;
    for u in test_functions {
        let (a, b) = u.support();
        far_end = far_end.max(b);
        let num = quad::integrate(
            |x| u.deriv(x).powi(2) + profile.value(x) * u.eval(x).powi(2),
            a,
            b,
            QUAD_ABS_TOL,
            QUAD_REL_TOL,
        )?;
        let den = quad::integrate(|x| u.eval(x).powi(2), a, b, QUAD_ABS_TOL, QUAD_REL_TOL)?;
        quotients.push(num.value / den.value);
    }
    let inf_w = infimum_of_w(profile, far_end.max(100.0));
    let min_quotient = quotients.iter().cloned().fold(f64::INFINITY, f64::min);
    if min_quotient < inf_w - 1e-8 * (1.0 + inf_w.abs()) {
        return Err(HalflineError::HypothesisViolated(format!(
            "Rayleigh quotient {min_quotient} fell below inf W = {inf_w}; the Hardy bound is violated"
        )));
    }
    Ok(HardyReport { quotients, min_quotient, inf_w })
}

fn infimum_of_w(profile: &PotentialProfile, far: f64) -> f64 {
    let mut inf = f64::INFINITY;
    // log sweep through the origin region, linear sweep to the far end
    let mut rho = 1e-6;
    while rho < 1.0 {
        inf = inf.min(profile.w_remainder(rho));
        rho *= 1.05;
    }
    let n = 4000;
    for k in 0..=n {
        let r = 1.0 + (far - 1.0) * k as f64 / n as f64;
        inf = inf.min(profile.w_remainder(r));
    }
    inf
}

/// Shifted Rayleigh quotients `⟨(H - C₀) u_n, u_n⟩` of the dyadically scaled
/// family `u_n(ρ) = 2^{-n/2} u(2^{-n} ρ)`.
#[derive(Debug, Clone)]
pub struct CertificateReport {
    /// `(n, quotient)` pairs for `n = 0..=n_max`.
    pub quotients: Vec<(u32, f64)>,
    /// Kinetic integral `∫ |u'|²` of the seed.
    pub kinetic: f64,
    /// True when at least three consecutive quotients are strictly negative,
    /// which exhibits trial states below the essential spectrum at every
    /// deeper scale.
    pub succeeded: bool,
    /// First `n` opening a negative window of length three.
    pub first_window: Option<u32>,
}

/// Run the scaled-bump certificate. Requires a Coulombic tail with `C₁ < 0`;
/// a potential with `C₁ >= 0` is refused explicitly.
pub fn bound_state_certificate(
    profile: &PotentialProfile,
    seed: &BumpFunction,
    n_max: u32,
) -> Result<CertificateReport, HalflineError> {
    let (a, b) = seed.support();
    if a < 1.0 - 1e-12 || b > 2.0 + 1e-12 {
        return Err(HalflineError::InvalidInput(format!(
            "seed bump must be supported in (1, 2), got ({a}, {b})"
        )));
    }
    if profile.asymptotics.c1 >= 0.0 {
        return Err(HalflineError::HypothesisViolated(format!(
            "bound_state_certificate requires C1 < 0, got C1 = {}",
            profile.asymptotics.c1
        )));
    }
    let c0 = profile.asymptotics.c0;
    let kinetic = quad::integrate(|x| seed.deriv(x).powi(2), a, b, QUAD_ABS_TOL, QUAD_REL_TOL)?.value;
    let mut quotients = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let scale = 2f64.powi(n as i32);
        let pot = quad::integrate(
            |sigma| (profile.value(scale * sigma) - c0) * seed.eval(sigma).powi(2),
            a,
            b,
            QUAD_ABS_TOL,
            QUAD_REL_TOL,
        )?;
        let q = kinetic / (scale * scale) + pot.value;
        quotients.push((n, q));
    }
    let first_window = quotients
        .windows(3)
        .find(|w| w.iter().all(|&(_, q)| q < 0.0))
        .map(|w| w[0].0);
    Ok(CertificateReport { quotients, kinetic, succeeded: first_window.is_some(), first_window })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfline::AsymptoticData;

    fn coulomb_profile() -> PotentialProfile {
        let asym = AsymptoticData::from_c2(0.0, 0.0, -1.0).unwrap();
        PotentialProfile::new("pure attractive Coulomb", asym, |r| -1.0 / r).unwrap()
    }

    #[test]
    fn bump_is_normalised_and_smooth_at_edges() {
        let u = BumpFunction::standard_seed();
        let nn = quad::integrate(|x| u.eval(x).powi(2), 1.0, 2.0, 1e-12, 1e-12).unwrap();
        assert!((nn.value - 1.0).abs() < 1e-9);
        assert_eq!(u.eval(1.0), 0.0);
        assert_eq!(u.eval(2.0), 0.0);
        assert_eq!(u.deriv(0.5), 0.0);
    }

    #[test]
    fn hardy_equality_case_is_nonnegative() {
        // V = -1/(4ρ²): c2 = -1/4, W = 0; every quotient must be >= 0.
        let asym = AsymptoticData::from_c2(-0.25, 0.0, 0.0).unwrap();
        let p = PotentialProfile::new("critical Calogero", asym, |r| -0.25 / (r * r)).unwrap();
        let family = [
            BumpFunction::new(1.0, 2.0).unwrap(),
            BumpFunction::new(2.0, 4.0).unwrap(),
            BumpFunction::new(4.0, 8.0).unwrap(),
        ];
        let rep = hardy_witness(&p, &family).unwrap();
        assert_eq!(rep.inf_w, 0.0);
        assert!(rep.min_quotient >= 0.0, "min quotient {}", rep.min_quotient);
    }

    #[test]
    fn hypothesis_violations_are_refused() {
        let p = coulomb_profile();
        let seed = BumpFunction::standard_seed();
        // repulsive tail
        let asym = AsymptoticData::from_c2(0.0, 0.0, 1.0).unwrap();
        let repulsive = PotentialProfile::new("repulsive Coulomb", asym, |r| 1.0 / r).unwrap();
        assert!(matches!(
            bound_state_certificate(&repulsive, &seed, 8),
            Err(HalflineError::HypothesisViolated(_))
        ));
        // seed outside (1,2)
        let bad_seed = BumpFunction::new(2.0, 3.0).unwrap();
        assert!(bound_state_certificate(&p, &bad_seed, 8).is_err());
    }

    #[test]
    fn coulomb_certificate_matches_direct_quadrature_decomposition() {
        // For V = -1/ρ the quotient is exactly 4^{-n} I_kin - 2^{-n} J with
        // J = ∫ u²/σ dσ; check the decomposition and the kinetic/potential
        // scale separation in n.
        let p = coulomb_profile();
        let seed = BumpFunction::standard_seed();
        let rep = bound_state_certificate(&p, &seed, 14).unwrap();
        assert!(rep.succeeded, "quotients: {:?}", rep.quotients);
        let j = quad::integrate(|s| seed.eval(s).powi(2) / s, 1.0, 2.0, 1e-12, 1e-12)
            .unwrap()
            .value;
        for &(n, q) in &rep.quotients {
            let expect = rep.kinetic / 4f64.powi(n as i32) - j / 2f64.powi(n as i32);
            assert!(
                (q - expect).abs() < 1e-9 * (1.0 + expect.abs()),
                "n={n}: {q} vs {expect}"
            );
        }
        // once negative, the window stays negative for all larger n here
        let first = rep.first_window.unwrap();
        for &(n, q) in &rep.quotients {
            if n >= first {
                assert!(q < 0.0);
            }
        }
    }
}
