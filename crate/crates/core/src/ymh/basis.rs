//! The Coulomb/Laguerre trial basis: `b̃_n(r) = r² e^{-r/(n+1)} L³_{n-1}(2r/(n+1))`
//! built in exact rational arithmetic, its norms in closed form, and the
//! symbolic Coulomb eigenfunction check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::YmhError;
use crate::exact::factorial;
use crate::specfun::{laguerre_paper, PolynomialCoeffs};

/// A polynomial times a decaying exponential, `P(r) e^{-βr}`, exact.
#[derive(Clone, Debug)]
pub(crate) struct ExpPoly {
    pub poly: PolynomialCoeffs,
    pub beta: BigRational,
}

impl ExpPoly {
    pub fn mul(&self, other: &ExpPoly) -> ExpPoly {
        ExpPoly { poly: self.poly.mul(&other.poly), beta: &self.beta + &other.beta }
    }

    /// `∫_0^∞ P(r) e^{-βr} dr = Σ_q c_q q!/β^{q+1}`, exact.
    pub fn integrate(&self) -> BigRational {
        let inv_beta = self.beta.recip();
        let mut acc = BigRational::zero();
        let mut beta_pow = inv_beta.clone(); // 1/β^{q+1} at q = 0
        for (q, c) in self.poly.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc += c * BigRational::from_integer(factorial(q as u64)) * &beta_pow;
            }
            beta_pow *= &inv_beta;
        }
        acc
    }

    /// Apply `H₁ = -d²/dr² + 2/r² - 2/r` term by term; requires the
    /// polynomial to vanish to second order at the origin so all resulting
    /// powers stay non-negative.
    pub fn apply_h1(&self) -> ExpPoly {
        let coeffs = self.poly.coeffs();
        assert!(
            coeffs.iter().take(2).all(|c| c.is_zero()),
            "apply_h1 needs a polynomial divisible by r^2"
        );
        let deg = coeffs.len();
        let mut out = vec![BigRational::zero(); deg];
        let beta2 = &self.beta * &self.beta;
        for (q, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let qf = BigRational::from_integer(BigInt::from(q as u64));
            // -q(q-1) r^{q-2} + 2βq r^{q-1} - β² r^q + 2 r^{q-2} - 2 r^{q-1}
            let two = BigRational::from_integer(BigInt::from(2));
            out[q - 2] += c * (&two - &qf * (&qf - BigRational::one()));
            out[q - 1] += c * (&two * &self.beta * &qf - &two);
            out[q] -= c * &beta2;
        }
        ExpPoly { poly: PolynomialCoeffs::new(out), beta: self.beta.clone() }
    }

    pub fn eval_f64(&self, r: f64) -> f64 {
        self.poly.eval_f64(r) * (-self.beta.to_f64().unwrap() * r).exp()
    }
}

/// One trial function in unnormalised form.
#[derive(Clone, Debug)]
pub struct BasisFunction {
    /// Exact polynomial part (powers `r^{p+2}`, `p = 0..n-1`).
    pub poly: PolynomialCoeffs,
    /// Decay rate `1/(n+1)`.
    pub beta: BigRational,
    /// Norm constant `N_{n+1} = ∫ b̃_n² dr`, exact.
    pub norm: BigRational,
}

impl BasisFunction {
    pub(crate) fn exp_poly(&self) -> ExpPoly {
        ExpPoly { poly: self.poly.clone(), beta: self.beta.clone() }
    }

    pub fn eval_f64(&self, r: f64) -> f64 {
        self.exp_poly().eval_f64(r)
    }
}

/// The Galerkin trial space of dimension `dim`.
#[derive(Clone, Debug)]
pub struct CoulombBasis {
    pub dimension: usize,
    pub functions: Vec<BasisFunction>,
}

/// Build `b̃_n` for `n = 1..dim` from the associated Laguerre polynomials,
/// with norms from the exact factorial integrals.
pub fn build_basis(dim: usize) -> Result<CoulombBasis, YmhError> {
    if !(1..=60).contains(&dim) {
        return Err(YmhError::InvalidInput(format!(
            "basis dimension must be in 1..=60, got {dim}"
        )));
    }
    let mut functions = Vec::with_capacity(dim);
    for n in 1..=dim {
        let np1 = BigInt::from(n as u64 + 1);
        let beta = BigRational::new(BigInt::one(), np1.clone());
        let scale = BigRational::new(BigInt::from(2), np1);
        let poly = laguerre_paper(n as u32 - 1, 3)
            .substitute_scaled(&scale)
            .shift_up(2);
        let f = ExpPoly { poly, beta };
        let norm = f.mul(&f).integrate();
        functions.push(BasisFunction { poly: f.poly, beta: f.beta, norm });
    }
    Ok(CoulombBasis { dimension: dim, functions })
}

/// The diagonal mass matrix `diag(N_2, …, N_{dim+1})`, exact.
pub fn mass_matrix(basis: &CoulombBasis) -> Vec<BigRational> {
    basis.functions.iter().map(|f| f.norm.clone()).collect()
}

/// Apply `H_C - (1 - 1/n²)` symbolically to the Coulomb eigenfunction `ξ_n`
/// and return the maximum residual on a test grid, relative to the
/// function's own scale. Exact arithmetic makes the residual polynomial
/// vanish identically, so this checks the whole symbolic pipeline.
pub fn coulomb_eigencheck(n: u32) -> Result<f64, YmhError> {
    if n < 2 {
        return Err(YmhError::InvalidInput(format!(
            "Coulomb eigenfunctions start at n = 2, got {n}"
        )));
    }
    let nn = BigInt::from(n);
    let beta = BigRational::new(BigInt::one(), nn.clone());
    let scale = BigRational::new(BigInt::from(2), nn);
    let poly = laguerre_paper(n - 2, 3).substitute_scaled(&scale).shift_up(2);
    let xi = ExpPoly { poly, beta };
    // (H_C - E_n) ξ = (H₁ + 1/n²) ξ, since H_C = H₁ + 1 and E_n = 1 - 1/n².
    let mut residual = xi.apply_h1();
    let shift = BigRational::new(BigInt::one(), BigInt::from(n).pow(2));
    residual.poly = residual.poly.add(&xi.poly.scale(&shift));
    if residual.poly.is_zero() {
        return Ok(0.0);
    }
    let mut worst: f64 = 0.0;
    let mut scale_max: f64 = 0.0;
    for k in 1..=400 {
        let r = 0.1 * k as f64;
        worst = worst.max(residual.eval_f64(r).abs());
        scale_max = scale_max.max(xi.eval_f64(r).abs());
    }
    Ok(worst / scale_max)
}
