//! Canonical rational functions of `R`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};


use super::{Poly, Rational};
use crate::error::Error;

/// `numerator / denominator` with coprime parts and a monic denominator.
///
/// Zero is `0 / 1`. All content lives in the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduce `num / den` to canonical form.
    pub fn normalize(num: Poly, den: Poly) -> Result<RatFunc, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        // Strip the common power of R first; cheap and very common here.
        let low = num.low_order().min(den.low_order());
        let (num, den) = if low > 0 {
            (num.unshift(low), den.unshift(low))
        } else {
            (num, den)
        };
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let lc = den.leading();
        if lc.is_one() {
            return Ok(RatFunc { num, den });
        }
        let inv = lc.recip()?;
        Ok(RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// `c · R^k` for any integer `k`.
    pub fn monomial(c: Rational, k: i64) -> RatFunc {
        if k >= 0 {
            RatFunc::from_poly(Poly::monomial(c, k as usize))
        } else {
            RatFunc::normalize(Poly::constant(c), Poly::monomial(Rational::one(), (-k) as usize))
                .expect("nonzero denominator")
        }
    }

    /// The variable `R`.
    pub fn r() -> RatFunc {
        RatFunc::from_poly(Poly::r())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Exact value at `r`; fails at a pole.
    pub fn evaluate(&self, r: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return Err(Error::Pole(r.clone()));
        }
        Ok(self.num.eval(r) / d)
    }

    pub fn evaluate_f64(&self, r: f64) -> f64 {
        self.num.eval_f64(r) / self.den.eval_f64(r)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `f(s R)`.
    pub fn scale_variable(&self, s: &Rational) -> Result<RatFunc, Error> {
        RatFunc::normalize(self.num.scale_variable(s), self.den.scale_variable(s))
    }

    pub fn recip(&self) -> Result<RatFunc, Error> {
        RatFunc::normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, Error> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFunc::normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Degree of numerator minus degree of denominator (`None` for zero).
    pub fn degree_difference(&self) -> Option<i64> {
        self.num
            .degree()
            .map(|d| d as i64 - self.den.degree().unwrap_or(0) as i64)
    }

    /// Plain-text rendering; polynomials print bare, others as `(num)/(den)`.
    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            return self.num.to_text();
        }
        let wrap = |p: &Poly| {
            let t = p.to_text();
            let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
            if terms > 1 || t.contains('/') || t.starts_with('-') {
                format!("({t})")
            } else {
                t
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.to_text())
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RatFuncRepr {
    numerator: Poly,
    denominator: Poly,
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr {
            numerator: self.num.clone(),
            denominator: self.den.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    /// Accepts any representation and re-canonicalises it.
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RatFuncRepr::deserialize(deserializer)?;
        RatFunc::normalize(repr.numerator, repr.denominator).map_err(serde::de::Error::custom)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        RatFunc::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics when dividing by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Mul<&Rational> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &Rational) -> RatFunc {
        self.scale(rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);
