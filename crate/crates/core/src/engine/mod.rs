//! Extremal energy, ball magnitude, the conjectured polynomial and
//! Bessel-like capacities.
//!
//! Energies are stored divided by `ωₙ` ("reduced"), so the volume term of
//! a ball of radius `R` is `Rⁿ` and the sphere area `σ_{n-1} = n ωₙ` turns
//! into a factor `n`. No transcendental constant is ever materialised.

mod ball;
mod capacity;
mod conjecture;
mod flux;

use std::collections::BTreeMap;

use num_bigint::BigInt;

pub use ball::{ball_magnitude, BallMagnitudeResult};
pub use capacity::{bessel_capacity, Capacity};
pub use conjecture::{conjecture_gap, conjecture_polynomial, unit_ball_volume, ConjecturePolynomial, PiMultiple};
pub use flux::{boundary_flux, boundary_flux_recursive};

use crate::error::Error;
use crate::exact::{Poly, RatFunc, Rational};
use crate::radial::AlphaSolution;

pub(crate) fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Fluxes entering the energy sum together with the reduced energy
/// `Rⁿ + n R^{n-1} Σ_{m/2 < j ≤ m} (-1)^j C(m, j) (Δ^{j-1} h)'(R)`.
pub(crate) fn reduced_energy(
    alphas: &AlphaSolution,
) -> Result<(BTreeMap<u32, RatFunc>, RatFunc), Error> {
    let n = alphas.dim;
    let m = alphas.order();
    let mut fluxes = BTreeMap::new();
    let mut sum = RatFunc::zero();
    for j in (1..=m).filter(|&j| 2 * j > m) {
        let flux = boundary_flux_recursive(alphas, j)?;
        let sign = Rational::from(if j % 2 == 0 { 1 } else { -1 });
        sum = &sum + &flux.scale(&(sign * binomial(m, j)));
        fluxes.insert(j, flux);
    }
    let boundary = &sum * &RatFunc::from_poly(Poly::monomial(Rational::from(n as i64), n as usize - 1));
    let volume = RatFunc::from_poly(Poly::monomial(Rational::one(), n as usize));
    Ok((fluxes, &volume + &boundary))
}
