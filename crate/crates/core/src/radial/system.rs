use serde::Serialize;

use super::RadialElement;
use crate::error::Error;
use crate::exact::{Poly, RatFunc, Rational};

/// Half-dimension `ν = (n-1)/2` for odd `n`.
pub fn half_dimension(n: u32) -> Result<u32, Error> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenDimension(n));
    }
    Ok((n - 1) / 2)
}

/// Boundary conditions at `|x| = R` for the radial ansatz, with the
/// exponential factor `e^{-R}` stripped from every entry.
///
/// Row `2k` is the reduced condition for `Δ^k h(R)` and row `2k+1` the one
/// for `(Δ^k h)'(R)`; the right-hand side reads `1, 0, 1, 0, …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundarySystem {
    pub dim: u32,
    pub nu: u32,
    /// Basis indices `j` of the unknowns, ascending.
    pub unknowns: Vec<u32>,
    pub matrix: Vec<Vec<RatFunc>>,
    pub rhs: Vec<Rational>,
    pub condition_labels: Vec<String>,
}

fn condition_label(c: usize) -> String {
    let k = c / 2;
    let base = match k {
        0 => "h".to_string(),
        1 => "Δh".to_string(),
        _ => format!("Δ^{k}h"),
    };
    match (c % 2, k) {
        (0, _) => base,
        (_, 0) => "h'".to_string(),
        _ => format!("({base})'"),
    }
}

/// Generate the first `m` conditions of the ladder
/// `h = 1, h' = 0, Δh = 0, (Δh)' = 0, …` for the decaying ansatz
/// `Σ_{j=ν-m+1}^{ν} α_j ψ_j`.
///
/// Each row comes from applying `(Δ_ν - I)^k` to the basis and taking the
/// boundary value or normal derivative. Earlier conditions fold into the
/// right-hand side: `(Δ-I)^k h(R) = (-1)^k` and `((Δ-I)^k h)'(R) = 0`. Rows
/// are then rescaled by `(-1)^k` and `(-1)^{k+1}/R` respectively.
pub fn build_boundary_system(n: u32, m: u32) -> Result<BoundarySystem, Error> {
    let nu = half_dimension(n)?;
    if m == 0 || m > nu + 1 {
        return Err(Error::OutOfRange {
            what: "number of conditions m",
            value: m as i64,
            min: 1,
            max: nu as i64 + 1,
        });
    }
    let unknowns: Vec<u32> = (nu + 1 - m..=nu).collect();
    let inv_r = RatFunc::monomial(Rational::one(), -1);

    let mut ladders: Vec<RadialElement> = unknowns
        .iter()
        .map(|&j| RadialElement::basis(nu, j))
        .collect();
    let mut matrix = Vec::with_capacity(m as usize);
    let mut rhs = Vec::with_capacity(m as usize);
    let mut condition_labels = Vec::with_capacity(m as usize);
    for c in 0..m as usize {
        let k = c / 2;
        let sign = Rational::from(if k % 2 == 0 { 1 } else { -1 });
        let row: Vec<RatFunc> = if c % 2 == 0 {
            rhs.push(Rational::one());
            ladders
                .iter()
                .map(|e| e.boundary_value().scale(&sign))
                .collect()
        } else {
            rhs.push(Rational::zero());
            ladders
                .iter()
                .map(|e| &e.boundary_normal_derivative().scale(&-&sign) * &inv_r)
                .collect()
        };
        matrix.push(row);
        condition_labels.push(condition_label(c));
        if c % 2 == 1 {
            ladders = ladders
                .iter()
                .map(RadialElement::apply_shifted_laplacian)
                .collect();
        }
    }
    Ok(BoundarySystem {
        dim: n,
        nu,
        unknowns,
        matrix,
        rhs,
        condition_labels,
    })
}

impl BoundarySystem {
    pub fn size(&self) -> usize {
        self.unknowns.len()
    }

    /// `Σ_j A_ij x_j - b_i` for each row.
    pub fn residuals(&self, x: &[RatFunc]) -> Vec<RatFunc> {
        self.matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                let lhs = row
                    .iter()
                    .zip(x)
                    .fold(RatFunc::zero(), |acc, (a, xi)| &acc + &(a * xi));
                &lhs - &RatFunc::constant(b.clone())
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.unknowns.iter().map(|j| format!("α_{j}")).collect();
        out.push_str(&format!(
            "n = {}, ν = {}, unknowns: {}\n",
            self.dim,
            self.nu,
            header.join(", ")
        ));
        for ((row, b), label) in self.matrix.iter().zip(&self.rhs).zip(&self.condition_labels) {
            let entries: Vec<String> = row.iter().map(RatFunc::to_text).collect();
            out.push_str(&format!("[{label}] {} | {b}\n", entries.join(", ")));
        }
        out
    }
}

/// Reduced coefficients `ᾱ_j` with `α_j = e^{R} ᾱ_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaSolution {
    pub dim: u32,
    pub nu: u32,
    /// Basis indices matching `reduced_alphas`.
    pub indices: Vec<u32>,
    pub reduced_alphas: Vec<RatFunc>,
    /// Determinant of the boundary system.
    pub determinant: RatFunc,
}

impl AlphaSolution {
    /// Number of boundary conditions the solution satisfies.
    pub fn order(&self) -> u32 {
        self.indices.len() as u32
    }

    /// `ᾱ_j`, zero for indices outside the ansatz.
    pub fn alpha(&self, j: u32) -> RatFunc {
        self.indices
            .iter()
            .position(|&i| i == j)
            .map(|p| self.reduced_alphas[p].clone())
            .unwrap_or_default()
    }

    /// `e^{R} h = Σ ᾱ_j ψ_j` as a radial element.
    pub fn as_element(&self) -> RadialElement {
        RadialElement::from_terms(
            self.nu,
            self.indices
                .iter()
                .copied()
                .zip(self.reduced_alphas.iter().cloned()),
        )
    }
}

fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    let g = Poly::gcd(a, b);
    (a * &b.exact_div(&g).expect("gcd divides")).monic()
}

/// Exact solve by fraction-free Gauss–Jordan elimination over `Q[R]`.
///
/// Rows are cleared to polynomial entries first. After elimination every
/// diagonal entry equals the determinant of the cleared system, so each
/// unknown is a ratio of two polynomials, the Cramér quotient.
pub fn solve_alphas(system: &BoundarySystem) -> Result<AlphaSolution, Error> {
    let m = system.size();
    let mut scale_product = Poly::one();
    let mut aug: Vec<Vec<Poly>> = Vec::with_capacity(m);
    for (row, b) in system.matrix.iter().zip(&system.rhs) {
        let lcm = row
            .iter()
            .fold(Poly::one(), |acc, e| poly_lcm(&acc, e.denominator()));
        let mut cleared: Vec<Poly> = row
            .iter()
            .map(|e| e.numerator() * &lcm.exact_div(e.denominator()).expect("lcm multiple"))
            .collect();
        cleared.push(lcm.scale(b));
        scale_product = &scale_product * &lcm;
        aug.push(cleared);
    }

    let mut prev = Poly::one();
    let mut swaps = 0usize;
    for k in 0..m {
        let pivot = (k..m)
            .find(|&i| !aug[i][k].is_zero())
            .ok_or(Error::SingularSystem)?;
        if pivot != k {
            aug.swap(pivot, k);
            swaps += 1;
        }
        let pivot_row = aug[k].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..=m {
                if j == k {
                    continue;
                }
                let t = &(&pivot_row[k] * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = t.exact_div(&prev)?;
            }
            row[k] = Poly::zero();
        }
        prev = pivot_row[k].clone();
    }

    let det_cleared = if swaps.is_multiple_of(2) { prev.clone() } else { -&prev };
    let determinant = RatFunc::normalize(det_cleared, scale_product)?;
    if determinant.is_zero() {
        return Err(Error::SingularSystem);
    }
    let reduced_alphas = (0..m)
        .map(|i| RatFunc::normalize(aug[i][m].clone(), aug[i][i].clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlphaSolution {
        dim: system.dim,
        nu: system.nu,
        indices: system.unknowns.clone(),
        reduced_alphas,
        determinant,
    })
}
