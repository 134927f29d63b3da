//! LaTeX rendering with integer-cleared numerators and denominators.

use ballmag::exact::{MonomialStyle, Poly, RatFunc, Rational};
use num_bigint::BigInt;
use num_traits::One;

struct TexStyle;

impl MonomialStyle for TexStyle {
    fn monomial(&self, c: &Rational, k: usize) -> String {
        let power = match k {
            0 => String::new(),
            1 => "R".to_string(),
            _ => format!("R^{{{k}}}"),
        };
        if k == 0 {
            return scalar(c);
        }
        if c.is_one() {
            power
        } else if c.is_integer() {
            format!("{c}{power}")
        } else {
            format!("{}{power}", scalar(c))
        }
    }
}

/// `\frac{p}{q}` for non-integers, the bare integer otherwise; `c ≥ 0`.
fn scalar(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn rational(c: &Rational) -> String {
    if c.is_negative() {
        format!("-{}", scalar(&c.abs()))
    } else {
        scalar(c)
    }
}

pub fn poly(p: &Poly) -> String {
    p.render(&TexStyle)
}

fn int_poly(coeffs: &[BigInt], scale: &BigInt) -> Poly {
    Poly::new(
        coeffs
            .iter()
            .map(|c| Rational::from_integer(c * scale))
            .collect(),
    )
}

fn term_count(p: &Poly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// `\frac{a P}{b Q}` with `P`, `Q` primitive integer polynomials; the
/// denominator is written `b(Q)` when both parts are nontrivial.
pub fn ratfunc(f: &RatFunc) -> String {
    if f.is_polynomial() {
        return poly(f.numerator());
    }
    let (cn, pn) = f.numerator().primitive_decomposition();
    let (cd, pd) = f.denominator().primitive_decomposition();
    let c = cn / cd;
    let num = int_poly(&pn, c.numer());
    let den_poly = int_poly(&pd, &BigInt::one());
    let b = c.denom();
    let den = if b.is_one() {
        poly(&den_poly)
    } else if term_count(&den_poly) > 1 {
        format!("{b}({})", poly(&den_poly))
    } else {
        format!("{b}{}", poly(&den_poly))
    };
    format!("\\frac{{{}}}{{{den}}}", poly(&num))
}

/// Ball magnitudes in the form `\frac{R^n}{n!} + (\text{rest})`.
pub fn ball(n: u32, f: &RatFunc) -> String {
    if f.is_polynomial() {
        return poly(f.numerator());
    }
    let factorial: BigInt = (1..=n).map(BigInt::from).product();
    let volume = RatFunc::monomial(Rational::new(1, factorial).expect("nonzero"), n as i64);
    let rest = f - &volume;
    format!("\\frac{{R^{{{n}}}}}{{{n}!}} + {}", ratfunc(&rest))
}
