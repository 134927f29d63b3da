use std::ops::{Div, Mul};

use num_bigint::BigInt;
use serde::Serialize;

use super::{ball_magnitude, binomial, factorial};
use crate::error::Error;
use crate::exact::{Poly, RatFunc, Rational};

/// `coeff · π^(half_powers / 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMultiple {
    pub coeff: Rational,
    pub half_powers: i64,
}

impl PiMultiple {
    pub fn rational(c: Rational) -> Self {
        PiMultiple {
            coeff: c,
            half_powers: 0,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.half_powers == 0 || self.coeff.is_zero()).then_some(&self.coeff)
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * std::f64::consts::PI.powf(self.half_powers as f64 / 2.0)
    }
}

impl Mul for PiMultiple {
    type Output = PiMultiple;
    fn mul(self, rhs: PiMultiple) -> PiMultiple {
        PiMultiple {
            coeff: self.coeff * rhs.coeff,
            half_powers: self.half_powers + rhs.half_powers,
        }
    }
}

impl Div for PiMultiple {
    type Output = PiMultiple;
    fn div(self, rhs: PiMultiple) -> PiMultiple {
        PiMultiple {
            coeff: self.coeff / rhs.coeff,
            half_powers: self.half_powers - rhs.half_powers,
        }
    }
}

fn double_factorial(k: u32) -> BigInt {
    (1..=k).rev().step_by(2).map(BigInt::from).product()
}

/// Volume `ω_k = π^{k/2} / Γ(k/2 + 1)` of the unit ball in `ℝ^k`.
///
/// For odd `k`, `Γ(k/2 + 1) = k!! √π / 2^{(k+1)/2}`.
pub fn unit_ball_volume(k: u32) -> PiMultiple {
    if k.is_multiple_of(2) {
        PiMultiple {
            coeff: Rational::new(1, factorial(k / 2)).expect("nonzero"),
            half_powers: k as i64,
        }
    } else {
        let two_pow = BigInt::from(1) << k.div_ceil(2);
        PiMultiple {
            coeff: Rational::new(two_pow, double_factorial(k)).expect("nonzero"),
            half_powers: k as i64 - 1,
        }
    }
}

/// `Σ_i V_i(B_1) Rⁱ / (i! ω_i)` for the unit ball, with
/// `V_i(B_1) = C(n, i) ωₙ / ω_{n-i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjecturePolynomial {
    pub dim: u32,
    /// Coefficient of `Rⁱ` at index `i`.
    pub coeffs: Vec<Rational>,
}

impl ConjecturePolynomial {
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }
}

pub fn conjecture_polynomial(n: u32) -> Result<ConjecturePolynomial, Error> {
    let omega_n = unit_ball_volume(n);
    let coeffs = (0..=n)
        .map(|i| {
            let intrinsic =
                PiMultiple::rational(binomial(n, i)) * omega_n.clone() / unit_ball_volume(n - i);
            let c = intrinsic
                / (PiMultiple::rational(Rational::from_integer(factorial(i))) * unit_ball_volume(i));
            c.as_rational()
                .cloned()
                .ok_or(Error::IrrationalConjecture(n))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConjecturePolynomial { dim: n, coeffs })
}

/// Exact magnitude minus the conjectured polynomial.
pub fn conjecture_gap(n: u32) -> Result<RatFunc, Error> {
    let exact = ball_magnitude(n)?;
    let conj = RatFunc::from_poly(conjecture_polynomial(n)?.to_poly());
    Ok(&exact.magnitude - &conj)
}
