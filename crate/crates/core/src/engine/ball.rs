use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::{factorial, reduced_energy};
use crate::error::Error;
use crate::exact::{count_positive_roots, RatFunc, Rational};
use crate::radial::{ball_alphas, AlphaSolution};

/// Everything computed for the ball of radius `R` in `ℝⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallMagnitudeResult {
    pub dim: u32,
    pub alphas: AlphaSolution,
    /// `j ↦ e^{R} (Δ^{j-1} h)'(R)` for `(n+1)/4 < j ≤ (n+1)/2`.
    pub fluxes: BTreeMap<u32, RatFunc>,
    /// Extremal energy divided by `ωₙ`.
    pub reduced_energy: RatFunc,
    /// `reduced_energy / n!`.
    pub magnitude: RatFunc,
}

impl BallMagnitudeResult {
    /// Exclusive upper bound `(3n² - 2n + 7)/8` on the denominator degree.
    pub fn denominator_degree_bound(&self) -> Rational {
        let n = self.dim as i64;
        Rational::new(3 * n * n - 2 * n + 7, 8).expect("nonzero")
    }

    pub fn denominator_positive_roots(&self) -> usize {
        count_positive_roots(self.magnitude.denominator()).expect("nonzero denominator")
    }

    /// Whether numerator and denominator of the canonical form have only
    /// nonnegative coefficients. Reported, not enforced.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.magnitude
            .numerator()
            .coeffs()
            .iter()
            .chain(self.magnitude.denominator().coeffs())
            .all(|c| !c.is_negative())
    }
}

fn memo() -> &'static Mutex<HashMap<u32, Arc<BallMagnitudeResult>>> {
    static BALLS: OnceLock<Mutex<HashMap<u32, Arc<BallMagnitudeResult>>>> = OnceLock::new();
    BALLS.get_or_init(|| Mutex::new(HashMap::new()))
}

fn compute(n: u32) -> Result<BallMagnitudeResult, Error> {
    let alphas = ball_alphas(n)?;
    let (fluxes, reduced_energy) = reduced_energy(&alphas)?;
    let n_factorial = Rational::from_integer(factorial(n));
    let magnitude = reduced_energy.scale(&n_factorial.recip()?);
    Ok(BallMagnitudeResult {
        dim: n,
        alphas,
        fluxes,
        reduced_energy,
        magnitude,
    })
}

/// Magnitude of the closed ball of radius `R` in `ℝⁿ` for odd `n`.
///
/// Results are memoised per dimension.
pub fn ball_magnitude(n: u32) -> Result<Arc<BallMagnitudeResult>, Error> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenDimension(n));
    }
    if let Some(hit) = memo().lock().expect("ball memo poisoned").get(&n) {
        return Ok(Arc::clone(hit));
    }
    let result = Arc::new(compute(n)?);
    let mut table = memo().lock().expect("ball memo poisoned");
    Ok(Arc::clone(table.entry(n).or_insert(result)))
}
