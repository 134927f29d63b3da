use serde::Serialize;

use super::reduced_energy;
use crate::error::Error;
use crate::exact::{RatFunc, Rational};
use crate::radial::{build_boundary_system, half_dimension, solve_alphas};

/// `C_m(B_R, s²) / ωₙ` as a rational function of `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Capacity {
    pub dim: u32,
    pub order: u32,
    pub sqrt_lambda: Rational,
    pub value: RatFunc,
    /// Set when `m` is neither 1 nor `(n+1)/2`; the boundary conditions for
    /// those orders extend the magnitude ladder without independent support.
    pub experimental: bool,
}

/// Bessel-like capacity of the ball with `λ = s²`.
///
/// Uses `C_m(K, λ) = λ^{m - n/2} C_m(√λ K, 1)`, so the `λ = 1` energy is
/// evaluated at `sR` and multiplied by `s^{2m - n}`.
pub fn bessel_capacity(n: u32, m: u32, sqrt_lambda: &Rational) -> Result<Capacity, Error> {
    let nu = half_dimension(n)?;
    if m == 0 || m > nu + 1 {
        return Err(Error::OutOfRange {
            what: "capacity order m",
            value: m as i64,
            min: 1,
            max: nu as i64 + 1,
        });
    }
    if !sqrt_lambda.is_positive() {
        return Err(Error::NotPositive("sqrt(lambda)"));
    }
    let alphas = solve_alphas(&build_boundary_system(n, m)?)?;
    let (_, energy) = reduced_energy(&alphas)?;
    let exponent = 2 * m as i64 - n as i64;
    let prefactor = if exponent >= 0 {
        sqrt_lambda.pow(exponent as u32)
    } else {
        sqrt_lambda.pow((-exponent) as u32).recip()?
    };
    let value = energy.scale_variable(sqrt_lambda)?.scale(&prefactor);
    Ok(Capacity {
        dim: n,
        order: m,
        sqrt_lambda: sqrt_lambda.clone(),
        value,
        experimental: m != 1 && m != nu + 1,
    })
}
