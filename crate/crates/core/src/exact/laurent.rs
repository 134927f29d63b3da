//! Expansion of rational functions at `R = ∞`.

use serde::Serialize;

use super::{RatFunc, Rational};
use crate::error::Error;

/// Truncated expansion `Σ_i coeffs[i] · R^(top_degree - i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LaurentExpansion {
    pub top_degree: i64,
    pub coeffs: Vec<Rational>,
}

impl LaurentExpansion {
    pub fn truncation_order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `R^power`, zero outside the computed window.
    pub fn coeff_of_power(&self, power: i64) -> Rational {
        let idx = self.top_degree - power;
        if idx < 0 {
            return Rational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    pub fn to_text(&self) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            let power = self.top_degree - i as i64;
            let monomial = match power {
                0 => String::new(),
                1 => "R".to_string(),
                _ => format!("R^{power}"),
            };
            if monomial.is_empty() {
                terms.push(c.to_string());
            } else if c.is_one() {
                terms.push(monomial);
            } else {
                terms.push(format!("({c})*{monomial}"));
            }
        }
        terms.join(" + ")
    }
}

/// First `k` coefficients of `f` in descending powers of `R`.
pub fn laurent_at_infinity(f: &RatFunc, k: usize) -> Result<LaurentExpansion, Error> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "truncation order",
            value: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    let Some(a) = f.numerator().degree() else {
        return Ok(LaurentExpansion {
            top_degree: 0,
            coeffs: vec![Rational::zero(); k],
        });
    };
    let b = f.denominator().degree().unwrap_or(0);
    // In x = 1/R: f = R^(a-b) · n(x) / d(x) with d(0) = lead(den) ≠ 0.
    let rev_num: Vec<Rational> = (0..=a).map(|i| f.numerator().coeff(a - i)).collect();
    let rev_den: Vec<Rational> = (0..=b).map(|i| f.denominator().coeff(b - i)).collect();
    let d0_inv = rev_den[0].recip()?;
    let mut coeffs: Vec<Rational> = Vec::with_capacity(k);
    for i in 0..k {
        let mut acc = rev_num.get(i).cloned().unwrap_or_default();
        for l in 1..=i.min(b) {
            acc -= &(&rev_den[l] * &coeffs[i - l]);
        }
        coeffs.push(acc * &d0_inv);
    }
    Ok(LaurentExpansion {
        top_degree: a as i64 - b as i64,
        coeffs,
    })
}
