//! Empirical cap counts and discrepancy of point sets.
//!
//! Conventions: caps on S^{n−1} are closed (`v·u ≥ s`). Arcs on S¹ are
//! half-open, `[θ₀, θ₀ + L)` measured counterclockwise, and that choice is
//! what makes the fixed-length sweep and the telescoping identity exact.
//!
//! Every routine returns a [`DiscrepancyReport`] whose witness is a concrete
//! cap or arc realizing the reported deviation (or approaching it, for a
//! supremum that is only attained in the limit).

mod arc;
mod cap;
mod telescope;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sphere::{check_dim, Cap, PointSet};

pub use arc::{arc_discrepancy_fixed_length, circle_discrepancy};
pub use cap::{cap_directions, cap_discrepancy_fixed_height, cap_discrepancy_over_directions};
pub use telescope::{multiplier_for_beta, telescoping_check, TelescopeRecord};

/// The set family over which the supremum is taken.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    /// Caps of one height s, all centers.
    FixedHeight { s: f64 },
    /// Arcs of one length L = 2πa, all starting angles.
    FixedLength { length: f64 },
    /// Arcs of every length and position.
    AllCaps,
}

/// A set realizing (or approaching) the reported deviation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Cap {
        center: Vec<f64>,
        height: f64,
    },
    /// Arc from `start` counterclockwise through `length` radians.
    Arc {
        start: f64,
        length: f64,
        closed: bool,
    },
}

/// One hill-climb round: the step used and the value after it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RefineStep {
    pub step: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Method {
    Exact,
    /// A lower bound: the best of `directions` grid centers, then `refine`
    /// rounds of local search.
    Sampled {
        directions: usize,
        refine: usize,
        trace: Vec<RefineStep>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub family: Family,
    pub value: f64,
    pub witness: Witness,
    /// Empirical fraction of points in the witness set.
    pub empirical: f64,
    /// Uniform measure of the witness set.
    pub expected: f64,
    pub method: Method,
    pub n_points: usize,
    /// Anchored-arc value sup_β |#{θ_j < β}/N − β/2π|, for the circle family.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub star: Option<f64>,
}

pub(crate) fn require_points(ps: &PointSet) -> Result<()> {
    if ps.is_empty() {
        Err(Error::EmptyPointSet)
    } else {
        Ok(())
    }
}

pub(crate) fn count_in_cap(ps: &PointSet, center: &[f64], s: f64) -> usize {
    ps.iter()
        .filter(|p| crate::sphere::dot(p, center) >= s)
        .count()
}

/// (1/N)·#{j : v_j·center ≥ s}.
pub fn empirical_cap_fraction(ps: &PointSet, cap: &Cap) -> Result<f64> {
    require_points(ps)?;
    check_dim(ps.dim(), cap.dim())?;
    Ok(count_in_cap(ps, cap.center().as_slice(), cap.height()) as f64 / ps.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{Provenance, UnitVector};
    use std::f64::consts::{FRAC_PI_4, PI};

    #[test]
    fn empirical_fraction_examples() {
        let e = UnitVector::new(vec![0.6, 0.0, 0.8]).unwrap();
        let ps = PointSet::new(3, vec![e.clone(); 5], Provenance::new("test", 0)).unwrap();
        assert_eq!(
            empirical_cap_fraction(&ps, &Cap::new(e.clone(), 0.5).unwrap()).unwrap(),
            1.0
        );

        let pair = PointSet::new(3, vec![e.clone(), e.neg()], Provenance::new("test", 0)).unwrap();
        assert_eq!(
            empirical_cap_fraction(&pair, &Cap::new(e, 0.0).unwrap()).unwrap(),
            0.5
        );

        let square =
            PointSet::from_angles(&[0.0, PI / 2.0, PI, 1.5 * PI], Provenance::new("test", 0));
        for i in 0..1000 {
            // Half-turn arcs as closed caps of height 0; centers chosen off the
            // boundary-hitting angles.
            let phi = FRAC_PI_4 + i as f64 * 1e-3;
            let cap = Cap::new(UnitVector::from_angle(phi), 0.0).unwrap();
            assert_eq!(empirical_cap_fraction(&square, &cap).unwrap(), 0.5);
        }
    }

    #[test]
    fn empirical_fraction_errors() {
        let ps = PointSet::from_angles(&[], Provenance::new("test", 0));
        let cap = Cap::new(UnitVector::from_angle(0.0), 0.0).unwrap();
        assert_eq!(empirical_cap_fraction(&ps, &cap), Err(Error::EmptyPointSet));
        let ps = PointSet::from_angles(&[0.0], Provenance::new("test", 0));
        let cap3 = Cap::new(UnitVector::basis(3, 0).unwrap(), 0.0).unwrap();
        assert!(empirical_cap_fraction(&ps, &cap3).is_err());
    }

    #[test]
    fn report_serde_round_trip() {
        let r = DiscrepancyReport {
            family: Family::FixedHeight { s: 0.25 },
            value: 0.125,
            witness: Witness::Cap {
                center: vec![0.0, 0.0, 1.0],
                height: 0.25,
            },
            empirical: 0.5,
            expected: 0.375,
            method: Method::Sampled {
                directions: 10,
                refine: 2,
                trace: vec![RefineStep {
                    step: 0.1,
                    value: 0.125,
                }],
            },
            n_points: 8,
            star: None,
        };
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<DiscrepancyReport>(&json).unwrap(), r);
    }
}
