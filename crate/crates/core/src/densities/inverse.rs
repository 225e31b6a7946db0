use crate::error::{check_closed, Error, Result};

/// Solves cdf(x) = y on [lo, hi] for a continuous, strictly increasing `cdf`
/// with derivative `density`: bisection to width 1e-8, then Newton steps
/// clamped to the current bracket.
pub fn inverse_cdf(
    cdf: impl Fn(f64) -> f64,
    density: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    y: f64,
) -> Result<f64> {
    check_closed("probability", y, 0.0, 1.0, "[0, 1]")?;
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) {
        return Err(Error::InvalidParameter(format!(
            "empty bracket [{lo}, {hi}]"
        )));
    }
    if y == 0.0 {
        return Ok(lo);
    }
    if y == 1.0 {
        return Ok(hi);
    }
    let (mut a, mut b) = (lo, hi);
    while b - a > 1e-8 {
        let m = 0.5 * (a + b);
        let v = cdf(m) - y;
        if v == 0.0 {
            return Ok(m);
        }
        if v < 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    let mut x = 0.5 * (a + b);
    let mut best = (f64::INFINITY, x);
    for _ in 0..30 {
        let v = cdf(x) - y;
        if v.abs() < best.0 {
            best = (v.abs(), x);
        }
        if v.abs() < 1e-15 {
            break;
        }
        if v < 0.0 {
            a = a.max(x);
        } else {
            b = b.min(x);
        }
        let slope = density(x);
        let next = if slope > 0.0 && slope.is_finite() {
            x - v / slope
        } else {
            f64::NAN
        };
        // A Newton step that leaves the bracket falls back to bisection.
        let next = if next > a && next < b {
            next
        } else {
            0.5 * (a + b)
        };
        if next == x {
            break;
        }
        x = next;
    }
    Ok(best.1)
}
