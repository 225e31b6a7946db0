use crate::error::{check_open, Error, Result};

/// Exponent p = (n−3)/2 of the height-coordinate weight (1−t²)^p, split into
/// its base value (−½ or 0) and the number of unit steps above it.
fn weight_exponent(n: usize) -> (f64, usize) {
    if n.is_multiple_of(2) {
        (-0.5, (n - 2) / 2)
    } else {
        (0.0, (n - 3) / 2)
    }
}

/// ∫_s^1 (1−t²)^{(n−3)/2} dt, by the integration-by-parts recursion
/// I_p = (2p·I_{p−1} − s(1−s²)^p)/(2p+1) seeded with arccos(s) or 1−s.
pub fn cap_weight_tail(n: usize, s: f64) -> f64 {
    assert!(n >= 2, "sphere dimension must be at least 2");
    let (p0, steps) = weight_exponent(n);
    let mut tail = if p0 < 0.0 { s.acos() } else { 1.0 - s };
    let one_minus = (1.0 - s * s).max(0.0);
    let mut p = p0;
    for _ in 0..steps {
        p += 1.0;
        tail = (2.0 * p * tail - s * one_minus.powf(p)) / (2.0 * p + 1.0);
    }
    tail
}

/// ∫_{−1}^1 (1−t²)^{(n−3)/2} dt.
pub fn sphere_weight_total(n: usize) -> f64 {
    assert!(n >= 2, "sphere dimension must be at least 2");
    let (p0, steps) = weight_exponent(n);
    let mut total = if p0 < 0.0 { std::f64::consts::PI } else { 2.0 };
    let mut p = p0;
    for _ in 0..steps {
        p += 1.0;
        total *= 2.0 * p / (2.0 * p + 1.0);
    }
    total
}

/// Normalized uniform measure of a height-`s` cap on S^{n−1}.
pub fn cap_measure(n: usize, s: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "sphere dimension n={n} < 2"
        )));
    }
    check_open("cap height", s, -1.0, 1.0, "(-1, 1)")?;
    if s == 0.0 {
        return Ok(0.5);
    }
    // Evaluate on the non-negative side and reflect, so P(s) + P(−s) = 1 holds
    // to rounding.
    let upper = cap_weight_tail(n, s.abs()) / sphere_weight_total(n);
    Ok(if s >= 0.0 { upper } else { 1.0 - upper })
}

/// Height `s` with `cap_measure(n, s) = a`.
pub fn cap_height_for_measure(n: usize, a: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "sphere dimension n={n} < 2"
        )));
    }
    check_open("cap measure", a, 0.0, 1.0, "(0, 1)")?;
    let total = sphere_weight_total(n);
    let p = (n as f64 - 3.0) / 2.0;
    let f = |s: f64| cap_measure(n, s).expect("bracket stays inside (-1, 1)") - a;

    // Measure decreases in s. Bisect to a coarse bracket, then polish.
    let (mut lo, mut hi) = (-1.0f64, 1.0f64);
    while hi - lo > 1e-8 {
        let s = 0.5 * (lo + hi);
        let v = f(s);
        if v == 0.0 {
            return Ok(s);
        }
        if v > 0.0 {
            lo = s;
        } else {
            hi = s;
        }
    }
    let mut s = 0.5 * (lo + hi);
    for _ in 0..50 {
        let v = f(s);
        if v.abs() < 1e-15 {
            break;
        }
        let slope = -(1.0 - s * s).powf(p) / total;
        if slope == 0.0 || !slope.is_finite() {
            break;
        }
        // Newton may not leave the bracket.
        let next = (s - v / slope).clamp(lo, hi);
        if next == s {
            break;
        }
        s = next;
    }
    Ok(s)
}
