//! Nested dyadic grids inside simple convex shapes.
//!
//! Level `ℓ` keeps the lattice points `k·R/2^ℓ` lying in the shape; each
//! level contains the previous one, so the magnitudes form a nondecreasing
//! sequence of lower bounds for the magnitude of the shape.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{finite_magnitude, FiniteSpace};
use crate::error::Error;

pub const DEFAULT_POINT_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    /// `[-R, R]`; dimension must be 1.
    Interval,
    /// Closed Euclidean ball of radius `R`.
    Ball,
    /// `[-R, R]^d`.
    Cuboid,
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "interval" => Ok(Shape::Interval),
            "ball" => Ok(Shape::Ball),
            "cuboid" | "cube" => Ok(Shape::Cuboid),
            other => Err(Error::Parse(format!("unknown shape {other:?}"))),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Interval => "interval",
            Shape::Ball => "ball",
            Shape::Cuboid => "cuboid",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridLevel {
    pub level: u32,
    pub points: usize,
    pub magnitude: f64,
}

fn lattice(dim: u32, half: i64, keep: &dyn Fn(&[i64]) -> bool) -> Vec<Vec<i64>> {
    let side = (2 * half + 1) as usize;
    let total = side.pow(dim);
    let mut out = Vec::new();
    let mut idx = vec![-half; dim as usize];
    for _ in 0..total {
        if keep(&idx) {
            out.push(idx.clone());
        }
        for c in idx.iter_mut() {
            *c += 1;
            if *c <= half {
                break;
            }
            *c = -half;
        }
    }
    out
}

/// Lattice points of level `level` in the shape.
pub fn grid_points(shape: Shape, dim: u32, radius: f64, level: u32) -> Result<Vec<Vec<f64>>, Error> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::NotPositive("radius"));
    }
    if dim == 0 || (shape == Shape::Interval && dim != 1) {
        return Err(Error::OutOfRange {
            what: "grid dimension",
            value: dim as i64,
            min: 1,
            max: if shape == Shape::Interval { 1 } else { i64::MAX },
        });
    }
    let half = 1i64 << level;
    let step = radius / half as f64;
    let limit = half * half;
    let ball = shape == Shape::Ball;
    let keep = move |k: &[i64]| !ball || k.iter().map(|c| c * c).sum::<i64>() <= limit;
    Ok(lattice(dim, half, &keep)
        .into_iter()
        .map(|k| k.iter().map(|&c| c as f64 * step).collect())
        .collect())
}

fn point_count(shape: Shape, dim: u32, level: u32) -> usize {
    let half = 1usize << level;
    let side = 2 * half + 1;
    match shape {
        Shape::Interval | Shape::Cuboid => side.saturating_pow(dim),
        // Upper estimate by the bounding cube; the exact count comes later.
        Shape::Ball => side.saturating_pow(dim),
    }
}

/// Magnitudes at levels `1..=levels`, failing once a grid exceeds `cap`.
pub fn grid_approximation(
    shape: Shape,
    dim: u32,
    radius: f64,
    levels: u32,
    cap: usize,
) -> Result<Vec<GridLevel>, Error> {
    if levels == 0 {
        return Err(Error::OutOfRange {
            what: "levels",
            value: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    let mut out = Vec::with_capacity(levels as usize);
    for level in 1..=levels {
        let bound = point_count(shape, dim, level);
        let too_large = |points| Error::GridTooLarge {
            level,
            points,
            cap,
            reached: level - 1,
        };
        // Check the bounding cube first so enumeration stays cheap.
        if shape != Shape::Ball && bound > cap {
            return Err(too_large(bound));
        }
        if bound > cap.saturating_mul(8) {
            return Err(too_large(bound));
        }
        let points = grid_points(shape, dim, radius, level)?;
        if points.len() > cap {
            return Err(too_large(points.len()));
        }
        let space = FiniteSpace::from_points(&points)?;
        let w = finite_magnitude(&space)?;
        out.push(GridLevel {
            level,
            points: points.len(),
            magnitude: w.magnitude,
        });
    }
    Ok(out)
}
