//! Bessel numbers `c^j_k` and the decaying radial basis `ψ_j`.
//!
//! The numbers are the coefficients of `g_j(t) = Σ_k c^j_k t^k`, where
//! `g_0 = 1` and `g_{j+1} = t³ g_j' + t g_j`. Row `j` is nonzero exactly for
//! `j ≤ k ≤ 2j-1`. The basis functions are `ψ_j(r) = e^{-r} g_j(1/r)`.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::exact::{Poly, RatFunc, Rational};

/// Row `j` of the triangle: `c^j_j, …, c^j_{2j-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BesselRow {
    pub j: u32,
    #[serde(serialize_with = "serialize_biguints")]
    pub values: Vec<BigUint>,
}

fn serialize_biguints<S: serde::Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl BesselRow {
    /// `c^j_k`, zero outside `[j, 2j-1]`.
    pub fn coeff(&self, k: u32) -> BigUint {
        if k < self.j {
            return BigUint::zero();
        }
        self.values
            .get((k - self.j) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Exponent/coefficient pairs `(k, c^j_k)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigUint)> {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.j + i as u32, c))
    }
}

fn row_memo() -> &'static Mutex<Vec<Vec<BigUint>>> {
    static ROWS: OnceLock<Mutex<Vec<Vec<BigUint>>>> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(vec![vec![BigUint::one()]]))
}

fn next_row(j: u32, row: &[BigUint]) -> Vec<BigUint> {
    let j = j as usize;
    let mut next = Vec::with_capacity(j + 1);
    next.push(BigUint::one());
    for k in (j + 1)..=(2 * j - 1) {
        next.push(BigUint::from(k - 1) * &row[k - 1 - j] + &row[k - j]);
    }
    next.push(BigUint::from(2 * j - 1) * &row[j - 1]);
    next
}

/// Row `j ≥ 1` of the Bessel triangle via the Pascal-type recurrence.
pub fn bessel_row(j: u32) -> Result<BesselRow, Error> {
    if j == 0 {
        return Err(Error::OutOfRange {
            what: "Bessel row index j",
            value: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    let mut rows = row_memo().lock().expect("bessel memo poisoned");
    while rows.len() < j as usize {
        let last = rows.len() as u32;
        let next = next_row(last, &rows[last as usize - 1]);
        rows.push(next);
    }
    Ok(BesselRow {
        j,
        values: rows[j as usize - 1].clone(),
    })
}

/// Closed form `(k-1)(k-2)⋯(2j-k) / (2^{k-j} (k-j)!)`, and `1` when `k = j`.
pub fn bessel_coeff_closed_form(j: u32, k: u32) -> Result<BigUint, Error> {
    if j == 0 {
        return Err(Error::OutOfRange {
            what: "Bessel row index j",
            value: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    if k < j || k > 2 * j - 1 {
        return Err(Error::OutOfRange {
            what: "Bessel column index k",
            value: k as i64,
            min: j as i64,
            max: 2 * j as i64 - 1,
        });
    }
    if k == j {
        return Ok(BigUint::one());
    }
    let numer: BigUint = ((2 * j - k)..k).map(BigUint::from).product();
    let fact: BigUint = (1..=(k - j)).map(BigUint::from).product();
    let denom = (BigUint::one() << (k - j)) * fact;
    let (q, r) = numer.div_rem(&denom);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `ψ_j(r) = e^{-r} Σ_k c_k r^{-k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiFunction {
    pub j: u32,
    /// `(k, c_k)` in increasing `k`.
    pub inverse_powers: Vec<(u32, BigUint)>,
}

impl fmt::Display for PsiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.j == 0 {
            return f.write_str("e^{-r}");
        }
        let terms: Vec<String> = self
            .inverse_powers
            .iter()
            .map(|(k, c)| {
                if c.is_one() {
                    format!("r^{{-{k}}}")
                } else {
                    format!("{c}r^{{-{k}}}")
                }
            })
            .collect();
        write!(f, "e^{{-r}}({})", terms.join(" + "))
    }
}

pub fn psi(j: u32) -> PsiFunction {
    if j == 0 {
        return PsiFunction {
            j,
            inverse_powers: vec![(0, BigUint::one())],
        };
    }
    let row = bessel_row(j).expect("j >= 1");
    PsiFunction {
        j,
        inverse_powers: row.terms().map(|(k, c)| (k, c.clone())).collect(),
    }
}

fn profile_memo() -> &'static Mutex<Vec<RatFunc>> {
    static PROFILES: OnceLock<Mutex<Vec<RatFunc>>> = OnceLock::new();
    PROFILES.get_or_init(|| Mutex::new(Vec::new()))
}

fn build_profile(j: u32) -> RatFunc {
    if j == 0 {
        return RatFunc::one();
    }
    // Σ_k c_k R^{-k} = (Σ_k c_k R^{2j-1-k}) / R^{2j-1}
    let top = 2 * j - 1;
    let row = bessel_row(j).expect("j >= 1");
    let mut coeffs = vec![Rational::zero(); top as usize + 1];
    for (k, c) in row.terms() {
        coeffs[(top - k) as usize] = Rational::from_integer(num_bigint::BigInt::from(c.clone()));
    }
    RatFunc::normalize(Poly::new(coeffs), Poly::monomial(Rational::one(), top as usize))
        .expect("nonzero denominator")
}

/// The exponential-free profile `φ_j(R) = e^{R} ψ_j(R)`.
pub fn psi_as_rational_profile(j: u32) -> RatFunc {
    let mut memo = profile_memo().lock().expect("profile memo poisoned");
    while memo.len() <= j as usize {
        let next = build_profile(memo.len() as u32);
        memo.push(next);
    }
    memo[j as usize].clone()
}
