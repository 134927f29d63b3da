use std::collections::BTreeMap;
use std::fmt;

use crate::bessel::psi_as_rational_profile;
use crate::exact::{RatFunc, Rational};

/// A finite combination `Σ_j a_j(R) ψ_j(r)` for the radial operator
/// `Δ_ν = d²/dr² + (2ν/r) d/dr`.
///
/// The coefficients depend on the parameter `R` only, never on `r`.
#[derive(Clone, PartialEq, Eq)]
pub struct RadialElement {
    nu: u32,
    terms: BTreeMap<u32, RatFunc>,
}

impl RadialElement {
    pub fn zero(nu: u32) -> Self {
        RadialElement {
            nu,
            terms: BTreeMap::new(),
        }
    }

    /// The single basis function `ψ_j`.
    pub fn basis(nu: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(j, RatFunc::one());
        RadialElement { nu, terms }
    }

    pub fn from_terms(nu: u32, terms: impl IntoIterator<Item = (u32, RatFunc)>) -> Self {
        let mut out = RadialElement::zero(nu);
        for (j, a) in terms {
            out.add_term(j, &a);
        }
        out
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, j: u32) -> RatFunc {
        self.terms.get(&j).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &RatFunc)> {
        self.terms.iter().map(|(&j, a)| (j, a))
    }

    fn add_term(&mut self, j: u32, a: &RatFunc) {
        if a.is_zero() {
            return;
        }
        let sum = match self.terms.get(&j) {
            Some(old) => old + a,
            None => a.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&j);
        } else {
            self.terms.insert(j, sum);
        }
    }

    pub fn add(&self, other: &RadialElement) -> RadialElement {
        debug_assert_eq!(self.nu, other.nu);
        let mut out = self.clone();
        for (j, a) in other.terms() {
            out.add_term(j, a);
        }
        out
    }

    pub fn sub(&self, other: &RadialElement) -> RadialElement {
        self.add(&other.scale_rational(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> RadialElement {
        RadialElement::from_terms(self.nu, self.terms().map(|(j, a)| (j, a * c)))
    }

    pub fn scale_rational(&self, c: &Rational) -> RadialElement {
        RadialElement::from_terms(self.nu, self.terms().map(|(j, a)| (j, a.scale(c))))
    }

    /// `(Δ_ν - I)`, using `(Δ_ν - I) ψ_j = 2(j - ν) ψ_{j+1}`.
    pub fn apply_shifted_laplacian(&self) -> RadialElement {
        let nu = self.nu as i64;
        RadialElement::from_terms(
            self.nu,
            self.terms().map(|(j, a)| {
                let factor = Rational::from(2 * (j as i64 - nu));
                (j + 1, a.scale(&factor))
            }),
        )
    }

    /// `Δ_ν`, i.e. `ψ_j ↦ ψ_j + 2(j - ν) ψ_{j+1}` term by term.
    pub fn apply_laplacian(&self) -> RadialElement {
        self.add(&self.apply_shifted_laplacian())
    }

    /// `e^{R} f(R) = Σ_j a_j φ_j(R)`.
    pub fn boundary_value(&self) -> RatFunc {
        self.terms()
            .map(|(j, a)| a * &psi_as_rational_profile(j))
            .fold(RatFunc::zero(), |acc, t| &acc + &t)
    }

    /// `e^{R} f'(R) = -R Σ_j a_j φ_{j+1}(R)`, from `ψ_j' = -r ψ_{j+1}`.
    pub fn boundary_normal_derivative(&self) -> RatFunc {
        let sum = self
            .terms()
            .map(|(j, a)| a * &psi_as_rational_profile(j + 1))
            .fold(RatFunc::zero(), |acc, t| &acc + &t);
        -(&sum * &RatFunc::r())
    }
}

impl fmt::Debug for RadialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadialElement(nu={}", self.nu)?;
        for (j, a) in self.terms() {
            write!(f, ", [{a}]ψ_{j}")?;
        }
        f.write_str(")")
    }
}
