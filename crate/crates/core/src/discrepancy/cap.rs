use rayon::prelude::*;

use super::{count_in_cap, require_points, DiscrepancyReport, Family, Method, RefineStep, Witness};
use crate::error::{check_open, Error, Result};
use crate::lowdisc::fibonacci_sphere;
use crate::sphere::generate::halton_direction;
use crate::sphere::{cap_measure, check_dim, tangent_basis, PointSet, UnitVector};

const INITIAL_STEP: f64 = 0.1;
const MIN_STEP: f64 = 1e-4;

/// The deterministic grid of `m` cap centers on S^{n−1}: the Fibonacci
/// lattice for n = 3 and inverse-normal Halton directions otherwise.
pub fn cap_directions(n: usize, m: usize) -> Result<Vec<UnitVector>> {
    if n < 3 {
        return Err(Error::IncompatibleMethod {
            method: "cap direction grid",
            dim: n,
        });
    }
    if m == 0 {
        return Err(Error::InvalidParameter(
            "direction count M must be at least 1".into(),
        ));
    }
    (0..m)
        .map(|i| {
            if n == 3 {
                UnitVector::new(fibonacci_sphere(i, m).to_vec())
            } else {
                halton_direction(i as u64 + 1, n)
            }
        })
        .collect()
}

fn deviation(ps: &PointSet, center: &[f64], s: f64, target: f64) -> (f64, usize) {
    let c = count_in_cap(ps, center, s);
    ((c as f64 / ps.len() as f64 - target).abs(), c)
}

/// Lower bound on sup_u |#{v_j·u ≥ s}/N − P(C_s)|: the best center in
/// [`cap_directions`] followed by `refine` hill-climb rounds.
///
/// For n = 2 the cap of height s is the arc of fraction arccos(s)/π and the
/// exact sweep is used instead.
pub fn cap_discrepancy_fixed_height(
    ps: &PointSet,
    s: f64,
    m: usize,
    refine: usize,
) -> Result<DiscrepancyReport> {
    check_open("cap height s", s, -1.0, 1.0, "(-1, 1)")?;
    require_points(ps)?;
    if ps.dim() == 2 {
        let a = s.acos() / std::f64::consts::PI;
        let x = super::arc::turns(ps)?;
        let mut r = super::arc::fixed_length_report(&x, a);
        r.family = Family::FixedHeight { s };
        return Ok(r);
    }
    let dirs = cap_directions(ps.dim(), m)?;
    cap_discrepancy_over_directions(ps, s, &dirs, refine)
}

/// As [`cap_discrepancy_fixed_height`] with an explicit set of starting
/// centers. With `refine = 0` the value is monotone under enlarging the set.
///
/// The grid maximum is reduced in parallel; ties go to the lowest index, so
/// the result does not depend on the thread count.
pub fn cap_discrepancy_over_directions(
    ps: &PointSet,
    s: f64,
    directions: &[UnitVector],
    refine: usize,
) -> Result<DiscrepancyReport> {
    check_open("cap height s", s, -1.0, 1.0, "(-1, 1)")?;
    require_points(ps)?;
    let n = ps.dim();
    if n < 3 {
        return Err(Error::IncompatibleMethod {
            method: "sampled cap discrepancy",
            dim: n,
        });
    }
    if directions.is_empty() {
        return Err(Error::InvalidParameter("direction set is empty".into()));
    }
    for d in directions {
        check_dim(n, d.dim())?;
    }
    let target = cap_measure(n, s)?;

    let (best_val, best_idx, best_count) = directions
        .par_iter()
        .enumerate()
        .map(|(i, u)| {
            let (v, c) = deviation(ps, u.as_slice(), s, target);
            (v, i, c)
        })
        .reduce(
            || (f64::NEG_INFINITY, usize::MAX, 0),
            |a, b| match a.0.total_cmp(&b.0) {
                std::cmp::Ordering::Greater => a,
                std::cmp::Ordering::Less => b,
                std::cmp::Ordering::Equal => {
                    if a.1 <= b.1 {
                        a
                    } else {
                        b
                    }
                }
            },
        );

    let mut center = directions[best_idx].as_slice().to_vec();
    let mut value = best_val;
    let mut count = best_count;
    let mut step = INITIAL_STEP;
    let mut trace = Vec::with_capacity(refine);
    for _ in 0..refine {
        if step < MIN_STEP {
            break;
        }
        let frame = tangent_basis(&center);
        let probes: Vec<Vec<f64>> = frame
            .iter()
            .flat_map(|e| [1.0, -1.0].map(|sign| probe(&center, e, sign * step)))
            .collect();
        let best = probes
            .par_iter()
            .enumerate()
            .map(|(i, p)| {
                let (v, c) = deviation(ps, p, s, target);
                (v, i, c)
            })
            .reduce(
                || (f64::NEG_INFINITY, usize::MAX, 0),
                |a, b| match a.0.total_cmp(&b.0) {
                    std::cmp::Ordering::Greater => a,
                    std::cmp::Ordering::Less => b,
                    std::cmp::Ordering::Equal => {
                        if a.1 <= b.1 {
                            a
                        } else {
                            b
                        }
                    }
                },
            );
        if best.0 > value {
            value = best.0;
            count = best.2;
            center = probes[best.1].clone();
        } else {
            step *= 0.5;
        }
        trace.push(RefineStep { step, value });
    }

    Ok(DiscrepancyReport {
        family: Family::FixedHeight { s },
        value,
        witness: Witness::Cap { center, height: s },
        empirical: count as f64 / ps.len() as f64,
        expected: target,
        method: Method::Sampled {
            directions: directions.len(),
            refine,
            trace,
        },
        n_points: ps.len(),
        star: None,
    })
}

/// cos(θ)·u + sin(θ)·e, renormalized; e is a unit tangent at u.
fn probe(u: &[f64], e: &[f64], theta: f64) -> Vec<f64> {
    let (sn, cs) = theta.sin_cos();
    let v: Vec<f64> = u.iter().zip(e).map(|(a, b)| cs * a + sn * b).collect();
    let r = crate::sphere::norm(&v);
    v.into_iter().map(|x| x / r).collect()
}
