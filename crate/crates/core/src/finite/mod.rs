//! Magnitude of finite metric spaces in binary64.
//!
//! A weighting `w` solves `Z w = 1` with similarity matrix
//! `Z_xy = exp(-t d(x, y))`; the magnitude is `Σ w`. Finite subsets of
//! Euclidean space have positive-definite `Z`, so Cholesky is the primary
//! solver, with full-pivot LU as a fallback for explicit matrices.

mod grid;
mod io;

pub use grid::{grid_approximation, grid_points, GridLevel, Shape, DEFAULT_POINT_CAP};
pub use io::{read_distance_csv, read_points_csv};

use nalgebra::{DMatrix, DVector};

use crate::error::Error;

/// Tolerance for symmetry, diagonal and triangle checks on explicit matrices.
pub const METRIC_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct FiniteSpace {
    distances: DMatrix<f64>,
    scale: f64,
}

impl FiniteSpace {
    /// Euclidean distances between the given points.
    pub fn from_points(points: &[Vec<f64>]) -> Result<Self, Error> {
        let n = points.len();
        if let Some(d) = points.first().map(Vec::len) {
            if points.iter().any(|p| p.len() != d) {
                return Err(Error::InvalidMetric("points have differing dimensions".into()));
            }
        }
        let distances = DMatrix::from_fn(n, n, |i, j| {
            points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
        });
        Ok(FiniteSpace {
            distances,
            scale: 1.0,
        })
    }

    /// An explicit distance matrix, validated as a metric.
    pub fn from_distance_matrix(rows: &[Vec<f64>]) -> Result<Self, Error> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMetric("distance matrix is not square".into()));
        }
        let d = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
        for i in 0..n {
            if d[(i, i)].abs() > METRIC_TOLERANCE {
                return Err(Error::InvalidMetric(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                if !d[(i, j)].is_finite() {
                    return Err(Error::InvalidMetric(format!("non-finite entry at ({i}, {j})")));
                }
                if (d[(i, j)] - d[(j, i)]).abs() > METRIC_TOLERANCE {
                    return Err(Error::InvalidMetric(format!("asymmetric at ({i}, {j})")));
                }
                if i != j && d[(i, j)] <= 0.0 {
                    return Err(Error::InvalidMetric(format!(
                        "non-positive distance at ({i}, {j})"
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if d[(i, j)] > d[(i, k)] + d[(k, j)] + METRIC_TOLERANCE {
                        return Err(Error::InvalidMetric(format!(
                            "triangle inequality fails for ({i}, {j}) via {k}"
                        )));
                    }
                }
            }
        }
        Ok(FiniteSpace {
            distances: d,
            scale: 1.0,
        })
    }

    /// `N` points at mutual distance `t` (the vertices of a regular simplex).
    pub fn simplex(n: usize, t: f64) -> Result<Self, Error> {
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 0.0 } else { t }).collect())
            .collect();
        FiniteSpace::from_distance_matrix(&rows)
    }

    /// The same space with all distances multiplied by `t`.
    pub fn with_scale(&self, t: f64) -> Result<Self, Error> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::NotPositive("scale"));
        }
        Ok(FiniteSpace {
            distances: self.distances.clone(),
            scale: t,
        })
    }

    pub fn len(&self) -> usize {
        self.distances.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.scale * self.distances[(i, j)]
    }

    pub fn similarity_matrix(&self) -> DMatrix<f64> {
        self.distances.map(|d| (-self.scale * d).exp())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    pub weights: Vec<f64>,
    pub magnitude: f64,
    /// `max |Z w - 1|`.
    pub residual: f64,
}

/// Residual bound accepted for a weighting of `n` points.
pub fn residual_bound(n: usize) -> f64 {
    1e-10 * n.max(1) as f64
}

fn weight_vector(z: &DMatrix<f64>, w: DVector<f64>) -> WeightVector {
    let ones = DVector::from_element(z.nrows(), 1.0);
    let residual = (z * &w - ones).amax();
    WeightVector {
        magnitude: w.sum(),
        weights: w.iter().copied().collect(),
        residual,
    }
}

pub fn finite_magnitude(space: &FiniteSpace) -> Result<WeightVector, Error> {
    let n = space.len();
    if n == 0 {
        return Ok(WeightVector {
            weights: Vec::new(),
            magnitude: 0.0,
            residual: 0.0,
        });
    }
    let z = space.similarity_matrix();
    let ones = DVector::from_element(n, 1.0);
    let bound = residual_bound(n);
    if let Some(chol) = z.clone().cholesky() {
        let wv = weight_vector(&z, chol.solve(&ones));
        if wv.residual <= bound && wv.magnitude.is_finite() {
            return Ok(wv);
        }
    }
    log::warn!("Cholesky failed for {n}-point similarity matrix; retrying with pivoted LU");
    let w = z
        .clone()
        .full_piv_lu()
        .solve(&ones)
        .ok_or_else(|| Error::IllConditioned("similarity matrix is singular".into()))?;
    let wv = weight_vector(&z, w);
    if wv.residual <= bound && wv.magnitude.is_finite() {
        Ok(wv)
    } else {
        Err(Error::IllConditioned(format!(
            "residual {:.3e} exceeds {:.3e}",
            wv.residual, bound
        )))
    }
}

/// Magnitudes of `(X, t·d)` for each `t`.
pub fn scaling_profile(space: &FiniteSpace, t_values: &[f64]) -> Result<Vec<f64>, Error> {
    if t_values.iter().any(|&t| t.is_nan() || t <= 0.0) {
        return Err(Error::NotPositive("scale factor"));
    }
    if t_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidMetric("scale factors must be increasing".into()));
    }
    t_values
        .iter()
        .map(|&t| finite_magnitude(&space.with_scale(t)?).map(|w| w.magnitude))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_singleton() {
        let empty = FiniteSpace::from_points(&[]).unwrap();
        assert_eq!(finite_magnitude(&empty).unwrap().magnitude, 0.0);
        let one = FiniteSpace::from_points(&[vec![0.3, -1.0]]).unwrap();
        assert_eq!(finite_magnitude(&one).unwrap().magnitude, 1.0);
    }

    #[test]
    fn simplex_value() {
        let s = FiniteSpace::simplex(4, 1.0).unwrap();
        let w = finite_magnitude(&s).unwrap();
        let expected = 4.0 / (1.0 + 3.0 * (-1.0f64).exp());
        assert!((w.magnitude - expected).abs() < 1e-14);
        assert!((w.magnitude - 1.901_468).abs() < 1e-6);
    }

    #[test]
    fn two_points() {
        let s = FiniteSpace::from_points(&[vec![0.0], vec![1.0]]).unwrap();
        let m = scaling_profile(&s, &[1.0]).unwrap()[0];
        assert!((m - 2.0 / (1.0 + (-1.0f64).exp())).abs() < 1e-14);
        assert!((m - 1.462_12).abs() < 1e-5);
    }

    #[test]
    fn metric_validation() {
        assert!(FiniteSpace::from_distance_matrix(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(FiniteSpace::from_distance_matrix(&[vec![1.0]]).is_err());
        assert!(FiniteSpace::from_distance_matrix(&[vec![0.0, 0.0], vec![0.0, 0.0]]).is_err());
        let bad_triangle = vec![
            vec![0.0, 1.0, 5.0],
            vec![1.0, 0.0, 1.0],
            vec![5.0, 1.0, 0.0],
        ];
        assert!(FiniteSpace::from_distance_matrix(&bad_triangle).is_err());
        assert!(FiniteSpace::from_distance_matrix(&[vec![0.0, 1.0]]).is_err());
    }

    #[test]
    fn scaling_profile_checks() {
        let s = FiniteSpace::simplex(3, 1.0).unwrap();
        assert!(scaling_profile(&s, &[1.0, 0.5]).is_err());
        assert!(scaling_profile(&s, &[0.0]).is_err());
        let big = scaling_profile(&s, &[1.0, 10.0, 100.0]).unwrap();
        assert!((big[2] - 3.0).abs() < 1e-6);
        assert!(big[0] < big[1] && big[1] < big[2]);
    }
}
