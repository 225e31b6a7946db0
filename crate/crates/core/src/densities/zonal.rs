use serde::{Deserialize, Serialize};

use super::inverse_cdf;
use crate::cap_transform::{funk_hecke_lambda, odd_mean_zero_check};
use crate::error::{check_closed, Error, Result};
use crate::orthopoly::LegendrePoly;
use crate::sphere::{cap_measure, check_dim, dot, sphere_weight_total, Cap, UnitVector};

/// Density 1 + c·P_k^{(n)}(axis·v) relative to P, with k odd and 0 < c < 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZonalDensity {
    dim: usize,
    degree: usize,
    coefficient: f64,
    axis: UnitVector,
}

impl ZonalDensity {
    pub fn new(dim: usize, degree: usize, coefficient: f64, axis: UnitVector) -> Result<Self> {
        if dim < 3 {
            return Err(Error::InvalidParameter(format!(
                "zonal densities need n ≥ 3, got {dim}"
            )));
        }
        if degree.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "degree must be odd, got {degree}"
            )));
        }
        if !(coefficient > 0.0 && coefficient < 1.0) {
            return Err(Error::OutOfDomain {
                name: "coefficient c",
                value: coefficient,
                range: "(0, 1)",
            });
        }
        check_dim(dim, axis.dim())?;
        Ok(Self {
            dim,
            degree,
            coefficient,
            axis,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self) -> f64 {
        self.coefficient
    }

    pub fn axis(&self) -> &UnitVector {
        &self.axis
    }

    fn poly(&self) -> LegendrePoly {
        LegendrePoly::new(self.dim, self.degree).expect("validated")
    }

    /// Density as a function of the height t = axis·v.
    pub fn value_at_height(&self, t: f64) -> f64 {
        1.0 + self.coefficient * self.poly().eval(t)
    }

    pub fn value(&self, v: &UnitVector) -> Result<f64> {
        check_dim(self.dim, v.dim())?;
        Ok(self.value_at_height(dot(self.axis.as_slice(), v.as_slice()).clamp(-1.0, 1.0)))
    }

    /// ∫ density dP, by quadrature of the odd part.
    pub fn total_mass(&self) -> f64 {
        1.0 + self.coefficient * odd_mean_zero_check(self.dim, self.degree).expect("odd degree")
    }

    /// Certified lower bound 1 − c on the density, from |P_k| ≤ 1.
    pub fn positivity_bound(&self) -> f64 {
        1.0 - self.coefficient
    }

    /// Q(C_s(u)) = P(C_s) + c·λ_k(s)·P_k(axis·u).
    pub fn cap_probability(&self, cap: &Cap) -> Result<f64> {
        check_dim(self.dim, cap.dim())?;
        let s = cap.height();
        let lambda = funk_hecke_lambda(self.dim, self.degree, s)?;
        let t = dot(self.axis.as_slice(), cap.center().as_slice()).clamp(-1.0, 1.0);
        Ok(cap_measure(self.dim, s)? + self.coefficient * lambda * self.poly().eval(t))
    }

    /// CDF of t = axis·v under Q: G(t) = 1 − P(C_t) − c·λ_k(t).
    pub fn marginal_cdf(&self, t: f64) -> Result<f64> {
        check_closed("t", t, -1.0, 1.0, "[-1, 1]")?;
        if t == -1.0 {
            return Ok(0.0);
        }
        if t == 1.0 {
            return Ok(1.0);
        }
        let lambda = funk_hecke_lambda(self.dim, self.degree, t)?;
        Ok(1.0 - cap_measure(self.dim, t)? - self.coefficient * lambda)
    }

    /// Derivative of [`Self::marginal_cdf`].
    pub fn marginal_density(&self, t: f64) -> f64 {
        let p = (self.dim as f64 - 3.0) / 2.0;
        self.value_at_height(t) * (1.0 - t * t).max(0.0).powf(p) / sphere_weight_total(self.dim)
    }

    pub fn inverse_marginal_cdf(&self, y: f64) -> Result<f64> {
        inverse_cdf(
            |t| self.marginal_cdf(t).expect("bracket is [-1, 1]"),
            |t| self.marginal_density(t),
            -1.0,
            1.0,
            y,
        )
    }
}

pub fn zonal_cap_probability(d: &ZonalDensity, cap: &Cap) -> Result<f64> {
    d.cap_probability(cap)
}

pub fn marginal_cdf(d: &ZonalDensity, t: f64) -> Result<f64> {
    d.marginal_cdf(t)
}
