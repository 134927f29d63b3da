//! Radial solutions of `(I - Δ)^m h = 0` outside a ball, in the ψ-basis.
//!
//! Every stored boundary quantity carries the factor `e^{R}`: profiles are
//! `φ_j = e^{R} ψ_j(R)` and coefficients are `ᾱ_j = e^{-R} α_j`. Products of
//! one of each are therefore free of exponentials.

mod element;
mod system;

pub use element::RadialElement;
pub use system::{build_boundary_system, half_dimension, solve_alphas, AlphaSolution, BoundarySystem};

/// Build and solve the full magnitude system for odd `n`.
pub fn ball_alphas(n: u32) -> Result<AlphaSolution, crate::Error> {
    let nu = half_dimension(n)?;
    solve_alphas(&build_boundary_system(n, nu + 1)?)
}
