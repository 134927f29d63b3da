//! Exact magnitude of closed balls in odd-dimensional Euclidean space.
//!
//! The magnitude of the ball of radius `R` in `ℝⁿ`, `n` odd, is a rational
//! function of `R`. This crate computes it exactly. The extremal function
//! outside the ball is solved in a basis of decaying radial solutions, its
//! boundary fluxes are collected into the extremal energy, and the result
//! is divided by `n!·ωₙ`. A floating-point module for finite metric spaces
//! gives independent lower bounds.
//!
//! ```
//! use ballmag::engine::ball_magnitude;
//!
//! let three = ball_magnitude(3).unwrap();
//! assert_eq!(three.magnitude.to_text(), "R^3/6 + R^2 + 2R + 1");
//! ```

pub mod bessel;
pub mod engine;
mod error;
pub mod exact;
pub mod finite;
pub mod radial;

pub use error::Error;
