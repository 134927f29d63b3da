//! Boundary fluxes `(Δ^{j-1} h)'(R⁺)` of the extremal function.

use crate::bessel::psi_as_rational_profile;
use crate::error::Error;
use crate::exact::{RatFunc, Rational};
use crate::radial::AlphaSolution;

use super::binomial;

fn check_index(alphas: &AlphaSolution, j: u32) -> Result<(), Error> {
    if j == 0 || j > alphas.order() {
        return Err(Error::OutOfRange {
            what: "flux index j",
            value: j as i64,
            min: 1,
            max: alphas.order() as i64,
        });
    }
    Ok(())
}

/// `e^{R} (Δ^{j-1} h)'(R)` by applying `Δ_ν` to the solution `j-1` times.
pub fn boundary_flux(alphas: &AlphaSolution, j: u32) -> Result<RatFunc, Error> {
    check_index(alphas, j)?;
    let mut h = alphas.as_element();
    for _ in 1..j {
        h = h.apply_laplacian();
    }
    Ok(h.boundary_normal_derivative())
}

/// Whether `(Δ^k h)'(R) = 0` is one of the imposed boundary conditions.
fn derivative_imposed(order: u32, k: u32) -> bool {
    2 * k + 1 < order
}

/// `e^{R} (Δ^{j-1} h)'(R)` via the closed expansion of `Δ^{j-1}` on the
/// basis, drawing the lower fluxes it needs from a running table.
///
/// Lower fluxes fixed to zero by the boundary conditions are skipped.
pub fn boundary_flux_recursive(alphas: &AlphaSolution, j: u32) -> Result<RatFunc, Error> {
    check_index(alphas, j)?;
    let order = alphas.order();
    let nu = alphas.nu as i64;
    let r = RatFunc::r();
    // fluxes[k] = (Δ^k h)'(R)
    let mut fluxes: Vec<RatFunc> = Vec::with_capacity(j as usize);
    for jj in 1..=j {
        let steps = jj - 1;
        let mut direct = RatFunc::zero();
        for i in 0..=nu - steps as i64 {
            let alpha = alphas.alpha(i as u32);
            if alpha.is_zero() {
                continue;
            }
            let coeff = (0..steps as i64)
                .map(|t| Rational::from(2 * (i + t - nu)))
                .fold(Rational::one(), |acc, f| acc * f);
            let term = &alpha * &psi_as_rational_profile(i as u32 + jj);
            direct = &direct + &term.scale(&coeff);
        }
        let mut value = -(&direct * &r);
        for k in 0..steps {
            if derivative_imposed(order, k) {
                continue;
            }
            let sign = if (steps - k) % 2 == 0 { 1 } else { -1 };
            let c = Rational::from(sign) * binomial(steps, k);
            value = &value - &fluxes[k as usize].scale(&c);
        }
        fluxes.push(value);
    }
    Ok(fluxes.pop().expect("j >= 1"))
}
