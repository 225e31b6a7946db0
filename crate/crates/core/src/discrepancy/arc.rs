use std::f64::consts::TAU;

use super::{require_points, DiscrepancyReport, Family, Method, Witness};
use crate::error::{check_open, Result};
use crate::sphere::PointSet;

/// Breakpoints closer than this (in turns) are merged; the sliver between
/// them is a rounding artifact.
const TIE_TOL: f64 = 1e-12;

/// Angles of points on S¹ as fractions of a turn, in [0, 1).
pub(crate) fn turns(ps: &PointSet) -> Result<Vec<f64>> {
    require_points(ps)?;
    Ok(ps
        .angles()?
        .into_iter()
        .map(|t| {
            let x = t / TAU;
            if x >= 1.0 {
                0.0
            } else {
                x
            }
        })
        .collect())
}

/// Whether x lies in the half-open arc [t, t + a) mod 1.
#[inline]
pub(crate) fn in_arc(x: f64, t: f64, a: f64) -> bool {
    (x - t).rem_euclid(1.0) < a
}

/// Best (count, start) over all starting positions t of the arc [t, t + a),
/// a ∈ (0, 1). Returns the max of |count/N − a| with its count and a start
/// strictly inside the constant piece that attains it.
pub(crate) fn sweep(x: &[f64], a: f64) -> (f64, usize, f64) {
    let n = x.len();
    // x_j ∈ [t, t+a) ⇔ t ∈ (x_j − a, x_j]: the count is left-continuous with
    // +1 steps after x_j − a and −1 steps after x_j.
    let mut events: Vec<(f64, i64)> = Vec::with_capacity(2 * n);
    for &xj in x {
        events.push((xj, -1));
        events.push(((xj - a).rem_euclid(1.0) % 1.0, 1));
    }
    events.sort_by(|p, q| p.0.total_cmp(&q.0));

    let mut groups: Vec<(f64, i64)> = Vec::with_capacity(events.len());
    for (pos, delta) in events {
        match groups.last_mut() {
            Some(g) if pos - g.0 <= TIE_TOL => g.1 += delta,
            _ => groups.push((pos, delta)),
        }
    }
    // The first and last group may also be within tolerance across 0.
    if groups.len() > 1 {
        let last = *groups.last().unwrap();
        if groups[0].0 + 1.0 - last.0 <= TIE_TOL {
            groups.pop();
            groups[0].1 += last.1;
            groups[0].0 = last.0 - 1.0;
        }
    }

    let g = groups.len();
    // Piece i is the open interval between group i and group i+1.
    let gap = |i: usize| {
        let next = if i + 1 == g {
            groups[0].0 + 1.0
        } else {
            groups[i + 1].0
        };
        next - groups[i].0
    };
    let start = (0..g)
        .max_by(|&i, &j| gap(i).total_cmp(&gap(j)).then(j.cmp(&i)))
        .unwrap();
    let mid = |i: usize| (groups[i].0 + 0.5 * gap(i)).rem_euclid(1.0);

    let t0 = mid(start);
    let mut count = x.iter().filter(|&&xj| in_arc(xj, t0, a)).count() as i64;
    let nf = n as f64;
    let mut best = ((count as f64 / nf - a).abs(), count as usize, t0);
    for step in 1..g {
        let i = (start + step) % g;
        count += groups[i].1;
        let dev = (count as f64 / nf - a).abs();
        if dev > best.0 {
            best = (dev, count as usize, mid(i));
        }
    }
    best
}

/// Exact sup over θ₀ of |#{θ_j ∈ [θ₀, θ₀ + 2πa)}/N − a|, a ∈ (0, ½),
/// by an O(N log N) sweep over the 2N breakpoints.
pub fn arc_discrepancy_fixed_length(ps: &PointSet, a: f64) -> Result<DiscrepancyReport> {
    check_open("arc fraction a", a, 0.0, 0.5, "(0, 1/2)")?;
    let x = turns(ps)?;
    Ok(fixed_length_report(&x, a))
}

pub(crate) fn fixed_length_report(x: &[f64], a: f64) -> DiscrepancyReport {
    let (value, count, t) = sweep(x, a);
    DiscrepancyReport {
        family: Family::FixedLength { length: TAU * a },
        value,
        witness: Witness::Arc {
            start: TAU * t,
            length: TAU * a,
            closed: false,
        },
        empirical: count as f64 / x.len() as f64,
        expected: a,
        method: Method::Exact,
        n_points: x.len(),
        star: None,
    }
}

/// Extreme discrepancy sup over all arcs |count/N − length/2π|, with the
/// anchored-arc value alongside.
///
/// With x₁ ≤ … ≤ x_N in turns and d_i = x_i − i/N, the value is
/// 1/N + max d − min d, attained by the closed arc from x_A to x_B
/// (A = argmax d, B = argmin d), which holds too many points.
pub fn circle_discrepancy(ps: &PointSet) -> Result<DiscrepancyReport> {
    let mut x = turns(ps)?;
    x.sort_by(f64::total_cmp);
    let n = x.len();
    let nf = n as f64;
    let (mut imax, mut imin) = (0, 0);
    let mut star: f64 = 0.0;
    let d = |i: usize| x[i] - (i + 1) as f64 / nf;
    for (i, &xi) in x.iter().enumerate() {
        if d(i) > d(imax) {
            imax = i;
        }
        if d(i) < d(imin) {
            imin = i;
        }
        star = star.max((i + 1) as f64 / nf - xi).max(xi - i as f64 / nf);
    }
    let value = (1.0 / nf + d(imax) - d(imin)).min(1.0);
    let length = (x[imin] - x[imax]).rem_euclid(1.0);
    let count = if imax <= imin {
        imin - imax + 1
    } else {
        n - imax + imin + 1
    };
    Ok(DiscrepancyReport {
        family: Family::AllCaps,
        value,
        witness: Witness::Arc {
            start: TAU * x[imax],
            length: TAU * length,
            closed: true,
        },
        empirical: count as f64 / nf,
        expected: length,
        method: Method::Exact,
        n_points: n,
        star: Some(star),
    })
}
