//! Deterministic low-discrepancy sources: radical inverses, Halton points,
//! golden-ratio Kronecker sequences and the Fibonacci grid on S².

use std::f64::consts::PI;

/// (√5 − 1)/2, the fractional part of the golden ratio.
pub const GOLDEN_FRACTION: f64 = 0.618_033_988_749_894_8;

/// Real root of x³ = x + 1. Its reciprocal powers give the two-dimensional
/// golden Kronecker step.
pub const PLASTIC: f64 = 1.324_717_957_244_746;

const PRIMES: [u64; 32] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131,
];

/// Digit reversal of `index` in `base`, mapped into [0, 1).
pub fn radical_inverse(base: u64, mut index: u64) -> f64 {
    debug_assert!(base >= 2);
    let inv_base = 1.0 / base as f64;
    let mut scale = inv_base;
    let mut out = 0.0;
    while index > 0 {
        out += (index % base) as f64 * scale;
        index /= base;
        scale *= inv_base;
    }
    out
}

pub fn van_der_corput(index: u64) -> f64 {
    radical_inverse(2, index)
}

/// The `prime_index`-th prime (0 → 2). Supports the first 32 primes, which
/// bounds Halton dimension at 32.
pub fn nth_prime(prime_index: usize) -> Option<u64> {
    PRIMES.get(prime_index).copied()
}

/// Halton point with the first `dim` primes as bases.
pub fn halton(index: u64, dim: usize) -> Vec<f64> {
    (0..dim)
        .map(|d| radical_inverse(nth_prime(d).expect("halton dimension above 32"), index))
        .collect()
}

/// Fractional part in [0, 1), robust to `x.fract()` returning −0 or 1.0 after rounding.
pub fn frac(x: f64) -> f64 {
    let f = x - x.floor();
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// `index`-th element of the one-dimensional golden Kronecker sequence {jφ}.
pub fn kronecker_golden(index: u64) -> f64 {
    frac(index as f64 * GOLDEN_FRACTION)
}

/// `index`-th element of the two-dimensional golden Kronecker sequence with
/// steps (1/ρ, 1/ρ²), ρ the plastic number.
pub fn kronecker_golden_2d(index: u64) -> [f64; 2] {
    let a1 = 1.0 / PLASTIC;
    let a2 = a1 * a1;
    let j = index as f64;
    [frac(j * a1), frac(j * a2)]
}

/// Point `i` of the `m`-point Fibonacci grid on S².
pub fn fibonacci_sphere(i: usize, m: usize) -> [f64; 3] {
    let golden_angle = PI * (3.0 - 5f64.sqrt());
    let z = 1.0 - (2 * i + 1) as f64 / m as f64;
    let r = (1.0 - z * z).max(0.0).sqrt();
    let phi = golden_angle * i as f64;
    [r * phi.cos(), r * phi.sin(), z]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radical_inverse_base_two() {
        let got: Vec<f64> = (0..8).map(van_der_corput).collect();
        assert_eq!(got, vec![0.0, 0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875]);
    }

    #[test]
    fn halton_second_coordinate_is_base_three() {
        assert_eq!(halton(1, 2), vec![0.5, 1.0 / 3.0]);
        assert!((halton(5, 2)[1] - 7.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn plastic_number_is_a_root() {
        assert!((PLASTIC.powi(3) - PLASTIC - 1.0).abs() < 1e-14);
    }

    #[test]
    fn fibonacci_points_are_unit() {
        for i in 0..50 {
            let p = fibonacci_sphere(i, 50);
            let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            assert!((n - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn kronecker_stays_in_unit_interval() {
        for j in 0..10_000 {
            let x = kronecker_golden(j);
            assert!((0.0..1.0).contains(&x));
            let [a, b] = kronecker_golden_2d(j);
            assert!((0.0..1.0).contains(&a) && (0.0..1.0).contains(&b));
        }
    }
}
