//! Numerical verification laboratory for the spectral identities behind
//! fourth-moment computations of Hecke-Maass cusp forms: gamma-quotient
//! weights, approximate functional equations, Kuznetsov trace formulas,
//! imaginary-order Bessel transforms and GL(3) Voronoi kernels, all audited
//! at desk scale (modest spectral parameter, extended precision).

pub mod arith;
pub mod bessel;
pub mod error;
pub mod experiments;
pub mod gamma;
pub mod kuznetsov;
pub mod lfun;
pub mod precision;
pub mod quad;
pub mod report;
pub mod spectra;
pub mod voronoi;
pub mod weights;

pub use error::LabError;
pub use precision::{Cplx, Real};
pub use report::{Provenance, VerificationReport};
