//! Numerical laboratory for Krein systems and their discrete relatives.
//!
//! A Krein system is the pair of coupled first-order ODEs
//!
//! ```text
//!   dP/dr  =  iλ P − conj(a(r)) P*,     P(0, λ)  = 1,
//!   dP*/dr = −a(r) P,                   P*(0, λ) = 1,
//! ```
//!
//! the continuous analogue of the Szegő recursion for orthogonal
//! polynomials on the unit circle. This crate provides:
//!
//! * exact piecewise-constant propagation of the system ([`krein`]),
//! * spectral densities on the line and measures on the circle ([`measures`]),
//! * quadrature, Fejér smoothing and the Szegő/outer function ([`numerics`]),
//! * reproducing kernels, Christoffel functions and a direct
//!   Paley–Wiener minimization oracle ([`kernels`]),
//! * the discrete unit-circle side: Verblunsky coefficients, Szegő
//!   recursion and circle Christoffel functions ([`opuc`]),
//! * the half-line Dirac system and its transformation onto a Krein
//!   system at doubled radius ([`dirac`]).
//!
//! All values are immutable after construction and safe to share across
//! threads; trajectories are sequential in the radius but independent
//! across spectral parameters.

pub mod dirac;
pub mod error;
pub mod kernels;
pub mod krein;
pub(crate) mod linalg;
pub mod measures;
pub mod numerics;
pub mod opuc;

pub use error::{Error, Result};
pub use krein::{Coefficient, KreinState, Trajectory};
pub use measures::{CircleMeasure, LineDensity};
pub use numerics::SampledGrid;
pub use opuc::{OpucEval, VerblunskySeq};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;
