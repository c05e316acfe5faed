//! Bound-state spectra of two families of radial Schrödinger operators from
//! magnetic-monopole physics: the channel obtained by linearising the
//! Yang-Mills-Higgs equations around the charge-one BPS monopole, and the
//! single-channel reductions of the Laplace operator on the Atiyah-Hitchin
//! moduli space of centred charge-two monopoles.
//!
//! The crate provides:
//!
//! * [`specfun`] — complete elliptic integrals, the Laguerre-polynomial
//!   convention used by the Coulomb basis, polygamma, and Hurwitz zeta,
//!   together with extended-precision variants used for matrix assembly;
//! * [`linalg`] — deterministic dense and tridiagonal symmetric eigensolvers;
//! * [`quad`] — adaptive Gauss-Kronrod quadrature;
//! * [`halfline`] — the generic half-line framework: potential
//!   classification, semi-boundedness witness, the infinitely-many-bound-states
//!   certificate, and a finite-difference Sturm-Liouville solver;
//! * [`ymh`] — the linearised Yang-Mills-Higgs channel: exact Coulomb/Laguerre
//!   Galerkin matrices and the resulting spectra;
//! * [`ah_geometry`] — the Atiyah-Hitchin radial geometry by ODE integration
//!   and by elliptic closed form;
//! * [`ah_spectra`] — the three bound-state channels of the Atiyah-Hitchin
//!   Laplacian and the Taub-NUT comparison.

pub mod ah_geometry;
pub mod ah_spectra;
mod exact;
pub mod halfline;
pub mod linalg;
pub mod quad;
pub mod specfun;
pub mod ymh;

pub use halfline::SpectrumResult;
