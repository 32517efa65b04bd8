//! Numerical engine for (pseudo-)hyperkähler metrics built from spectral curves.
//!
//! The crate is organised around five subsystems:
//!
//! - [`algebra`]: degree-bounded polynomials in ζ, matrix-valued polynomials,
//!   characteristic curves, adjugates, Weinstein–Aronszajn and Gelfand–Zeitlin
//!   identities, Sylvester resultants and regularity scans.
//! - [`curves`]: spectral-curve geometry — the real structure τ, fiber roots
//!   with sheet tracking, contour quadrature of meromorphic differentials on
//!   reducible curves, and residues over the ζ=0 fiber.
//! - [`glt`]: the generalised Legendre transform — evaluating a defining
//!   function F and its analytic gradient, solving the constraint equations,
//!   and producing the Kähler potential with first-order twistor data.
//! - [`hkverify`]: finite-difference verification of the hyperkähler property
//!   of a solved potential — symplectic condition, complex structure J,
//!   metric extraction and closed-form comparisons.
//! - [`flows`]: isospectral matrix ODE hierarchies (Nahm and the η²/ζ² flow)
//!   in both A-form and skew-hermitian T-form, with a Lax verifier and an
//!   adaptive embedded Runge–Kutta integrator.

pub mod algebra;
pub mod curves;
pub mod flows;
pub mod glt;
pub mod hkverify;
pub mod serde_complex;

use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("root finding did not converge for degree-{degree} polynomial")]
    RootFinding { degree: usize },
    #[error("path passes through (or too close to) a branch point near ζ = {zeta}")]
    PathThroughBranchPoint { zeta: Complex64 },
    #[error("quadrature failed to converge within {max_panels} panels (last change {last_change:.3e})")]
    QuadratureDivergence { max_panels: usize, last_change: f64 },
    #[error("cycle segments do not chain: {0}")]
    CycleChain(String),
    #[error("open chain passed where a closed cycle is required")]
    OpenCycle,
    #[error("Newton iteration did not converge after {iters} iterations (residual {residual:.3e})")]
    NewtonDivergence { iters: usize, residual: f64 },
    #[error("degenerate constraint point: Jacobian condition number {cond:.3e}")]
    DegenerateConstraint { cond: f64 },
    #[error("constraint solve failed inside finite-difference stencil: {0}")]
    StencilSolve(String),
    #[error("regularity scan inconclusive: {0}")]
    Inconclusive(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Convenience constructor for `Complex64`.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
