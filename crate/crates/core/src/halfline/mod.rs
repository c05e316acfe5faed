//! Schrödinger operators `-d²/dρ² + V(ρ)` on the half-line whose potentials
//! combine a Calogero `c₂/ρ²` term near the origin with a Coulombic
//! `C₀ + C₁/ρ` tail: classification of the asymptotic data, the choice of
//! boundary behaviour at the origin, a semi-boundedness witness built on
//! Hardy's inequality, a quadrature certificate for infinitely many bound
//! states below the essential spectrum, and an independent finite-difference
//! Sturm-Liouville solver used to cross-check every spectrum in the crate.

mod classify;
mod flatten;
mod solve;
mod witness;

pub use classify::{classify, Classification, FitWindows};
pub use flatten::flatten_radial;
pub use solve::solve_fd;
pub use witness::{bound_state_certificate, hardy_witness, BumpFunction, CertificateReport, HardyReport};

use crate::linalg::LinalgError;
use crate::quad::QuadError;

#[derive(Debug, thiserror::Error)]
pub enum HalflineError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("potential outside the supported class: {0}")]
    ClassificationFailed(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("quadrature failure: {0}")]
    Quadrature(#[from] QuadError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Asymptotic data of a half-line potential:
/// `V = c₂/ρ² + O(1)` at the origin and `V = C₀ + C₁/ρ + o(1/ρ)` at infinity,
/// with `c₂ = m² - 1/4` for `m >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticData {
    pub c2: f64,
    pub m: f64,
    pub c0: f64,
    pub c1: f64,
}

impl AsymptoticData {
    /// Build from `(c₂, C₀, C₁)`; fails when `c₂ < -1/4`, below which the
    /// operator is unbounded from below.
    pub fn from_c2(c2: f64, c0: f64, c1: f64) -> Result<Self, HalflineError> {
        if c2 < -0.25 - 1e-9 {
            return Err(HalflineError::HypothesisViolated(format!(
                "c2 = {c2} < -1/4"
            )));
        }
        let m = (c2 + 0.25).max(0.0).sqrt();
        Ok(AsymptoticData { c2, m, c0, c1 })
    }
}

/// Behaviour imposed at the `ρ = 0` endpoint.
///
/// For `m >= 1` the origin is in the limit-point case and the rule is forced;
/// for `0 <= m < 1` both fundamental solutions are square integrable and the
/// `ρ^{1/2+m}` branch is selected (excluding `ρ^{1/2-m}`, and `√ρ ln ρ` when
/// `m = 0`). A plain Dirichlet variant is kept for sensitivity checks only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryRule {
    pub m: f64,
    pub origin: OriginCondition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OriginCondition {
    /// Select the `ρ^{1/2+m}` branch of the fundamental system.
    ScaledBranch,
    /// Plain Dirichlet at the first node (sensitivity variant).
    Dirichlet,
}

impl BoundaryRule {
    pub fn for_m(m: f64) -> Self {
        BoundaryRule { m, origin: OriginCondition::ScaledBranch }
    }

    pub fn small_rho_exponent(&self) -> f64 {
        0.5 + self.m
    }
}

/// A potential on `(0, ∞)` together with its asymptotic data.
pub struct PotentialProfile {
    eval: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub asymptotics: AsymptoticData,
    pub description: String,
}

impl PotentialProfile {
    /// Wrap an evaluator after checking, on coarse grids, that
    /// `V - c₂/ρ²` stays bounded near the origin and `V → C₀` at infinity.
    pub fn new(
        description: impl Into<String>,
        asymptotics: AsymptoticData,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self, HalflineError> {
        let p = PotentialProfile { eval: Box::new(eval), asymptotics, description: description.into() };
        p.check_shape(60.0)?;
        Ok(p)
    }

    /// Same as [`PotentialProfile::new`] with an explicit far-field cutoff for
    /// the shape check.
    pub fn with_cutoff(
        description: impl Into<String>,
        asymptotics: AsymptoticData,
        cutoff: f64,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self, HalflineError> {
        let p = PotentialProfile { eval: Box::new(eval), asymptotics, description: description.into() };
        p.check_shape(cutoff)?;
        Ok(p)
    }

    fn check_shape(&self, cutoff: f64) -> Result<(), HalflineError> {
        let mut rho = 1e-6;
        while rho <= 1e-2 + 1e-12 {
            let w = self.w_remainder(rho);
            if !w.is_finite() || w.abs() > 1e8 {
                return Err(HalflineError::ClassificationFailed(format!(
                    "{}: V - c2/rho^2 = {w:e} at rho = {rho:e} is not bounded near the origin",
                    self.description
                )));
            }
            rho *= 10.0;
        }
        let far = self.value(cutoff);
        let expect = self.asymptotics.c0 + self.asymptotics.c1 / cutoff;
        let slack = 0.05 * (1.0 + self.asymptotics.c0.abs()) + 10.0 * self.asymptotics.c1.abs() / cutoff;
        if !far.is_finite() || (far - expect).abs() > slack {
            return Err(HalflineError::ClassificationFailed(format!(
                "{}: V({cutoff}) = {far} but the tail C0 + C1/rho predicts {expect}",
                self.description
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn value(&self, rho: f64) -> f64 {
        (self.eval)(rho)
    }

    /// The smooth remainder `W(ρ) = V(ρ) - c₂/ρ²`.
    #[inline]
    pub fn w_remainder(&self, rho: f64) -> f64 {
        self.value(rho) - self.asymptotics.c2 / (rho * rho)
    }
}

impl std::fmt::Debug for PotentialProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PotentialProfile")
            .field("description", &self.description)
            .field("asymptotics", &self.asymptotics)
            .finish()
    }
}

/// Ordered eigenvalues with method metadata and per-value error estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    /// Ascending eigenvalues.
    pub eigenvalues: Vec<f64>,
    /// Solver label.
    pub method: String,
    /// Grid size (finite differences) or basis dimension (Galerkin).
    pub dimension: usize,
    /// Domain truncation radius, where applicable.
    pub domain_cutoff: f64,
    /// Estimated absolute error per eigenvalue.
    pub estimated_error: Vec<f64>,
    /// Whether the eigenvalue is resolved safely below the essential spectrum.
    pub reliable: Vec<bool>,
}
