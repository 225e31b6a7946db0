//! Points, caps and rotations on S^{n−1}, the uniform measure of caps, and
//! reference generators for uniformly distributed sequences.
//!
//! Caps are closed: `v` belongs to the cap with center `u` and height `s`
//! exactly when `u·v ≥ s`. On S¹ the arc routines in
//! [`crate::discrepancy`] use half-open arcs instead; the two conventions
//! differ only on measure-zero boundaries.

pub(crate) mod generate;
mod measure;
mod pointset;
mod rotation;

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{check_open, Error, Result};

pub use generate::{generate_uniform, UniformMethod};
pub use measure::{cap_height_for_measure, cap_measure, cap_weight_tail, sphere_weight_total};
pub use pointset::{PointSet, Provenance};
pub use rotation::{rotate, Rotation};

/// Norms below this are rejected as degenerate.
pub const DEGENERATE_NORM: f64 = 1e-9;

const UNIT_SLACK: f64 = 1e-14;

/// A point of S^{n−1}, n ≥ 2.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct UnitVector(Vec<f64>);

impl UnitVector {
    /// Normalizes `coords`. Vectors already unit to within 1e-14 are kept
    /// bit-for-bit, so re-reading a written point set is lossless.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "unit vectors need at least 2 coordinates, got {}",
                coords.len()
            )));
        }
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("non-finite coordinate".into()));
        }
        let norm = norm(&coords);
        if norm < DEGENERATE_NORM {
            return Err(Error::DegenerateVector(norm));
        }
        if (norm - 1.0).abs() <= UNIT_SLACK {
            return Ok(Self(coords));
        }
        Ok(Self(coords.into_iter().map(|x| x / norm).collect()))
    }

    /// The `i`-th standard basis vector of R^n.
    pub fn basis(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::InvalidParameter(format!(
                "basis index {i} out of range for n={n}"
            )));
        }
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        Self::new(v)
    }

    /// (cos θ, sin θ) on S¹.
    pub fn from_angle(theta: f64) -> Self {
        Self(vec![theta.cos(), theta.sin()])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn dot(&self, other: &UnitVector) -> Result<f64> {
        check_dim(self.dim(), other.dim())?;
        Ok(dot(&self.0, &other.0))
    }

    /// Polar angle in [0, 2π). Only meaningful on S¹.
    pub fn angle(&self) -> Result<f64> {
        check_dim(2, self.dim())?;
        Ok(canonical_angle(self.0[1].atan2(self.0[0])))
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }
}

impl TryFrom<Vec<f64>> for UnitVector {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<UnitVector> for Vec<f64> {
    fn from(v: UnitVector) -> Self {
        v.0
    }
}

/// The closed cap {v : center·v ≥ height}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cap {
    center: UnitVector,
    height: f64,
}

impl Cap {
    pub fn new(center: UnitVector, height: f64) -> Result<Self> {
        check_open("cap height", height, -1.0, 1.0, "(-1, 1)")?;
        Ok(Self { center, height })
    }

    pub fn center(&self) -> &UnitVector {
        &self.center
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn contains(&self, v: &UnitVector) -> Result<bool> {
        check_dim(self.dim(), v.dim())?;
        Ok(self.contains_slice(v.as_slice()))
    }

    /// Membership for raw coordinates; the caller guarantees the dimension.
    #[inline]
    pub fn contains_slice(&self, v: &[f64]) -> bool {
        dot(self.center.as_slice(), v) >= self.height
    }

    /// Normalized uniform measure P(C).
    pub fn measure(&self) -> f64 {
        cap_measure(self.dim(), self.height).expect("height validated at construction")
    }
}

pub fn cap_contains(cap: &Cap, v: &UnitVector) -> Result<bool> {
    cap.contains(v)
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Maps any angle into [0, 2π).
pub fn canonical_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Orthonormal basis of the tangent space u^⊥, obtained by Gram–Schmidt on
/// the standard basis with the direction most aligned with `u` skipped.
pub fn tangent_basis(u: &[f64]) -> Vec<Vec<f64>> {
    let n = u.len();
    let skip = (0..n)
        .max_by(|&i, &j| u[i].abs().total_cmp(&u[j].abs()))
        .unwrap_or(0);
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n.saturating_sub(1));
    for i in (0..n).filter(|&i| i != skip) {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        let proj = dot(&e, u);
        for (x, ui) in e.iter_mut().zip(u) {
            *x -= proj * ui;
        }
        for b in &basis {
            let p = dot(&e, b);
            for (x, bi) in e.iter_mut().zip(b) {
                *x -= p * bi;
            }
        }
        let nrm = norm(&e);
        e.iter_mut().for_each(|x| *x /= nrm);
        basis.push(e);
    }
    basis
}
