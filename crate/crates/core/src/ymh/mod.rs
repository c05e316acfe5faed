//! The linearised Yang-Mills-Higgs channel: the radial potential, the
//! Coulomb/Laguerre Galerkin basis, exact mass and stiffness matrices, the
//! generalized eigenproblem for the bound-state ladder, and reconstruction of
//! the gauge-field fluctuation profiles from an eigenfunction.

mod basis;
mod fluctuation;
mod potential;
mod solve;
mod stiffness;

pub use basis::{build_basis, coulomb_eigencheck, mass_matrix, BasisFunction, CoulombBasis};
pub use fluctuation::{reconstruct_fluctuation, Fluctuation};
pub use potential::{v_ymh, v_ymh_derivative};
pub use solve::{solve_table1, Table1Solution};
pub use stiffness::{matrix_pair, stiffness_matrix, MatrixPair, StiffnessEntries};

use crate::halfline::HalflineError;
use crate::linalg::LinalgError;
use crate::specfun::SpecFunError;

/// Essential-spectrum bottom of the channel; eigenvalues live below it.
pub const ESSENTIAL_BOTTOM: f64 = 1.0;

#[derive(Debug, thiserror::Error)]
pub enum YmhError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("assembly precision exhausted: {0}; retry with more precision bits")]
    Precision(String),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Halfline(#[from] HalflineError),
}
