//! Special functions backing the closed-form matrix elements and the
//! Atiyah-Hitchin closed-form solution: complete elliptic integrals, the
//! Laguerre-polynomial convention of the Coulomb basis, digamma/polygamma,
//! Hurwitz zeta, and the two Laplace transforms of `r^a / sinh^k(r)` that the
//! stiffness matrix reduces to.
//!
//! Everything here is a pure function of its arguments.

mod elliptic;
mod laguerre;
mod laplace;
mod poly;
mod zeta;

pub use elliptic::{elliptic_e, elliptic_k, elliptic_k_derivative};
pub use laguerre::laguerre_paper;
pub use laplace::{laplace_r_pow_over_sinh, laplace_r_pow_over_sinh2};
pub(crate) use laplace::{laplace_r_pow_over_sinh2_fx, laplace_r_pow_over_sinh_fx};
pub use poly::PolynomialCoeffs;
pub use zeta::{digamma, hurwitz_zeta, polygamma};
pub(crate) use zeta::hurwitz_zeta_fx;

/// Domain and convergence failures of the special-function layer.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecFunError {
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("series did not converge: {0}")]
    NonConvergence(String),
}
