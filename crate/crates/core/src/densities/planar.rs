use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::inverse_cdf;
use crate::error::{Error, Result};

/// Density 1 + ½·sin(2qθ) with respect to dθ/2π on S¹, built for the
/// rational arc fraction a = p/q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarRationalDensity {
    p: u64,
    q: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PlanarRationalDensity {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidParameter("p and q must be positive".into()));
        }
        if gcd(p, q) != 1 {
            return Err(Error::InvalidParameter(format!(
                "p={p} and q={q} are not coprime"
            )));
        }
        if 2 * p >= q {
            return Err(Error::InvalidParameter(format!(
                "p/q = {p}/{q} must be below 1/2"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The arc fraction p/q at which arcs cannot tell this density from uniform.
    pub fn arc_fraction(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    pub fn value(&self, theta: f64) -> f64 {
        1.0 + 0.5 * (2.0 * self.q as f64 * theta).sin()
    }

    /// Q-measure of the half-open arc [θ₀, θ₀ + length).
    pub fn arc_probability(&self, theta0: f64, length: f64) -> Result<f64> {
        if !(length > 0.0 && length <= TAU) {
            return Err(Error::OutOfDomain {
                name: "arc length",
                value: length,
                range: "(0, 2π]",
            });
        }
        let q = self.q as f64;
        // ∫ ½ sin(2qθ) over the arc = (cos 2qθ₀ − cos 2q(θ₀+L))/(4q)
        //                           = sin(2qθ₀ + qL)·sin(qL)/(2q)
        let oscillation = (2.0 * q * theta0 + q * length).sin() * (q * length).sin() / (2.0 * q);
        Ok((length + oscillation) / TAU)
    }

    /// H(θ) = Q([0, θ)) for θ ∈ [0, 2π].
    pub fn cdf(&self, theta: f64) -> f64 {
        let q = self.q as f64;
        (theta + (1.0 - (2.0 * q * theta).cos()) / (4.0 * q)) / TAU
    }

    pub fn inverse_cdf(&self, y: f64) -> Result<f64> {
        let theta = inverse_cdf(|t| self.cdf(t), |t| self.value(t) / TAU, 0.0, TAU, y)?;
        Ok(if theta >= TAU { 0.0 } else { theta })
    }
}

pub fn planar_arc_probability(d: &PlanarRationalDensity, theta0: f64, length: f64) -> Result<f64> {
    d.arc_probability(theta0, length)
}
