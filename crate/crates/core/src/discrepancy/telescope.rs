use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::arc::turns;
use crate::error::{check_open, Error, Result};
use crate::sphere::PointSet;

/// Both sides of Σ_{i=1}^m χ_{[(i−1)2πa, i·2πa)} = k + χ_{[0,β)}, averaged
/// over the points, with 2πma = β + 2πk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TelescopeRecord {
    pub lhs: f64,
    pub k: u64,
    pub beta: f64,
    pub rhs: f64,
    /// Integer form of `lhs`: total number of (point, arc) incidences.
    pub lhs_count: u64,
    /// Integer form of `rhs`: k·N + #{θ_j < β}.
    pub rhs_count: u64,
}

impl TelescopeRecord {
    pub fn holds(&self) -> bool {
        self.lhs_count == self.rhs_count
    }
}

/// Splits e = i·a into (⌊e⌋, e − ⌊e⌋). Consecutive arcs share endpoints
/// computed by this one function, so they tile [0, m·a) without overlap.
fn split(i: u64, a: f64) -> (u64, f64) {
    let e = i as f64 * a;
    let k = e.floor();
    (k as u64, e - k)
}

/// Evaluates both sides of the telescoping identity for arcs of fraction
/// a ∈ (0, 1). The identity holds on integer counts for every point set.
pub fn telescoping_check(ps: &PointSet, a: f64, m: u64) -> Result<TelescopeRecord> {
    check_open("arc fraction a", a, 0.0, 1.0, "(0, 1)")?;
    if m == 0 {
        return Err(Error::InvalidParameter(
            "multiplier m must be at least 1".into(),
        ));
    }
    let x = turns(ps)?;
    let mut lhs_count = 0u64;
    let (mut k_prev, mut f_prev) = split(0, a);
    for i in 1..=m {
        let (k_i, f_i) = split(i, a);
        let wraps = k_i != k_prev;
        lhs_count += x
            .iter()
            .filter(|&&xj| {
                if wraps {
                    xj >= f_prev || xj < f_i
                } else {
                    xj >= f_prev && xj < f_i
                }
            })
            .count() as u64;
        (k_prev, f_prev) = (k_i, f_i);
    }
    let (k, f) = split(m, a);
    let n = x.len() as u64;
    let rhs_count = k * n + x.iter().filter(|&&xj| xj < f).count() as u64;
    Ok(TelescopeRecord {
        lhs: lhs_count as f64 / n as f64,
        k,
        beta: TAU * f,
        rhs: rhs_count as f64 / n as f64,
        lhs_count,
        rhs_count,
    })
}

/// Smallest m ≤ `max_m` with 2πma mod 2π within `tol` of `beta`.
pub fn multiplier_for_beta(a: f64, beta: f64, tol: f64, max_m: u64) -> Option<u64> {
    (1..=max_m).find(|&m| {
        let b = TAU * split(m, a).1;
        let d = (b - beta).rem_euclid(TAU);
        d.min(TAU - d) <= tol
    })
}
