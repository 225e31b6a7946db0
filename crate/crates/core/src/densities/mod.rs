//! Probability densities relative to P that agree with P on every cap of one
//! fixed size, and constructive sequences equidistributed for them.
//!
//! Two families are provided:
//!
//! * [`PlanarRationalDensity`] on S¹: 1 + ½·sin(2qθ) against dθ/2π. Every arc
//!   of length 2πp/q covers exactly 2p periods of the sine, so its
//!   probability is p/q, the same as under the uniform measure.
//! * [`ZonalDensity`] on S^{n−1}: 1 + c·P_k^{(n)}(axis·v) with k odd and
//!   0 < c < 1. The probability of the cap C_s(u) is
//!   P(C_s) + c·λ_k(s)·P_k^{(n)}(axis·u), which equals P(C_s) for every u
//!   when λ_k(s) = 0.
//!
//! Sequences are produced by pushing a deterministic low-discrepancy
//! [`Driver`] through the inverse of the relevant CDF.

mod driver;
mod inverse;
mod planar;
mod zonal;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::sphere::{dot, tangent_basis, PointSet, Provenance, UnitVector};

pub use driver::{Driver, DriverKind};
pub use inverse::inverse_cdf;
pub use planar::{planar_arc_probability, PlanarRationalDensity};
pub use zonal::{marginal_cdf, zonal_cap_probability, ZonalDensity};

/// Grid size used by [`positivity_margin`].
pub const POSITIVITY_GRID: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Density {
    Planar(PlanarRationalDensity),
    Zonal(ZonalDensity),
}

impl From<PlanarRationalDensity> for Density {
    fn from(d: PlanarRationalDensity) -> Self {
        Density::Planar(d)
    }
}

impl From<ZonalDensity> for Density {
    fn from(d: ZonalDensity) -> Self {
        Density::Zonal(d)
    }
}

impl Density {
    pub fn dim(&self) -> usize {
        match self {
            Density::Planar(_) => 2,
            Density::Zonal(z) => z.dim(),
        }
    }

    /// Whitespace-free descriptor used as point-set provenance.
    pub fn descriptor(&self) -> String {
        match self {
            Density::Planar(d) => format!("qud-planar:p={},q={}", d.p(), d.q()),
            Density::Zonal(d) => {
                let axis: Vec<String> =
                    d.axis().as_slice().iter().map(|x| format!("{x}")).collect();
                format!(
                    "qud-zonal:n={},k={},c={},axis={}",
                    d.dim(),
                    d.degree(),
                    d.coefficient(),
                    axis.join(";")
                )
            }
        }
    }
}

/// Minimum of the density over a deterministic grid of [`POSITIVITY_GRID`]
/// samples of θ (planar) or of the height t = axis·v (zonal).
pub fn positivity_margin(d: &Density) -> f64 {
    let m = POSITIVITY_GRID;
    match d {
        Density::Planar(p) => (0..m)
            .map(|i| p.value(TAU * i as f64 / m as f64))
            .fold(f64::INFINITY, f64::min),
        Density::Zonal(z) => (0..m)
            .map(|i| z.value_at_height(-1.0 + 2.0 * i as f64 / (m - 1) as f64))
            .fold(f64::INFINITY, f64::min),
    }
}

/// First `count` points of a sequence equidistributed for `d`.
///
/// Planar: θ_j = H⁻¹(x_j) with x_j the first driver coordinate and H the
/// circle CDF. Zonal (n = 3 only): height t_j = G⁻¹(x_j), azimuth 2π·y_j,
/// assembled in a frame whose pole is the axis.
pub fn generate_qud(d: &Density, count: usize, driver: &Driver) -> Result<PointSet> {
    if count == 0 {
        return Err(Error::InvalidParameter(
            "sequence length must be at least 1".into(),
        ));
    }
    let provenance = Provenance::new(
        format!("{},driver={}", d.descriptor(), driver.kind().name()),
        driver.offset(),
    );
    match d {
        Density::Planar(p) => {
            let angles = (0..count as u64)
                .into_par_iter()
                .map(|j| p.inverse_cdf(driver.coord1(j)))
                .collect::<Result<Vec<f64>>>()?;
            Ok(PointSet::from_angles(&angles, provenance))
        }
        Density::Zonal(z) => {
            if z.dim() != 3 {
                return Err(Error::IncompatibleMethod {
                    method: "zonal sequence generation",
                    dim: z.dim(),
                });
            }
            let axis = z.axis().as_slice().to_vec();
            let frame = tangent_basis(&axis);
            let points = (0..count as u64)
                .into_par_iter()
                .map(|j| {
                    let [x, y] = driver.coord2(j)?;
                    let t = z.inverse_marginal_cdf(x)?;
                    let r = (1.0 - t * t).max(0.0).sqrt();
                    let (sin_phi, cos_phi) = (TAU * y).sin_cos();
                    let v: Vec<f64> = (0..3)
                        .map(|i| t * axis[i] + r * (cos_phi * frame[0][i] + sin_phi * frame[1][i]))
                        .collect();
                    UnitVector::new(v)
                })
                .collect::<Result<Vec<_>>>()?;
            PointSet::new(3, points, provenance)
        }
    }
}

/// Heights axis·v of every point, e.g. for comparing against [`marginal_cdf`].
pub fn heights_along(ps: &PointSet, axis: &UnitVector) -> Result<Vec<f64>> {
    crate::sphere::check_dim(ps.dim(), axis.dim())?;
    Ok(ps.iter().map(|p| dot(p, axis.as_slice())).collect())
}
