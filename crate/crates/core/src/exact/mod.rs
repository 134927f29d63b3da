//! Exact arithmetic: rational scalars, polynomials, rational functions.
//!
//! Everything here is exact. Values are immutable once built, so they can
//! be shared freely across threads.

mod laurent;
mod polynomial;
mod rational_function;
mod scalar;
mod sturm;

pub use laurent::{laurent_at_infinity, LaurentExpansion};
pub use polynomial::Poly;
pub use polynomial::MonomialStyle;
pub use rational_function::RatFunc;
pub use scalar::Rational;
pub use sturm::{count_positive_roots, sturm_sequence};

/// Canonical form of `num / den`; see [`RatFunc::normalize`].
pub fn normalize(num: Poly, den: Poly) -> Result<RatFunc, crate::Error> {
    RatFunc::normalize(num, den)
}
