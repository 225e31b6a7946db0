//! Legendre polynomials of dimension d: the Gegenbauer polynomials with
//! parameter (d−2)/2, normalized so that P_k^{(d)}(1) = 1. They are
//! orthogonal on [−1, 1] for the weight (1−t²)^{(d−3)/2}, the density of the
//! height coordinate t = e·v of a uniform point v on S^{d−1}.
//!
//! The three-term recurrence used throughout is
//!
//! ```text
//! (k + d − 2) P_{k+1}(t) = (2k + d − 2) t P_k(t) − k P_{k−1}(t),   P_0 = 1, P_1 = t.
//! ```
//!
//! Polynomials are never expanded into monomials; high degrees stay accurate.
//!
//! The positive zeros of the even-degree polynomials of dimension n+2 form
//! the freak-height set: cap heights s at which the cap transform on
//! S^{n−1} annihilates a nonzero odd function.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{check_closed, Error, Result};

/// Largest degree accepted by [`freak_heights`].
pub const MAX_FREAK_DEGREE: usize = 200;

/// Heights closer than this are treated as the same freak height.
pub const DEDUP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LegendrePoly {
    dim: usize,
    degree: usize,
}

impl LegendrePoly {
    pub fn new(dim: usize, degree: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidParameter(format!(
                "Legendre dimension d={dim} < 2"
            )));
        }
        Ok(Self { dim, degree })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Value at `t`. No domain check; the recurrence is valid for any real t.
    pub fn eval(&self, t: f64) -> f64 {
        eval_raw(self.dim, self.degree, t).0
    }

    /// (P_k(t), P_k'(t)).
    pub fn eval_with_derivative(&self, t: f64) -> (f64, f64) {
        let (p, _, dp) = eval_raw(self.dim, self.degree, t);
        (p, dp)
    }

    /// Zeros from the Jacobi matrix, Newton-polished.
    pub fn roots(&self) -> Vec<f64> {
        roots_jacobi(self.dim, self.degree)
    }
}

/// Returns (P_k(t), P_{k−1}(t), P_k'(t)).
fn eval_raw(d: usize, k: usize, t: f64) -> (f64, f64, f64) {
    if k == 0 {
        return (1.0, 0.0, 0.0);
    }
    let df = d as f64;
    let (mut p_prev, mut p) = (1.0, t);
    let (mut dp_prev, mut dp) = (0.0, 1.0);
    for j in 1..k {
        let jf = j as f64;
        let a = 2.0 * jf + df - 2.0;
        let c = jf + df - 2.0;
        let p_next = (a * t * p - jf * p_prev) / c;
        let dp_next = (a * (p + t * dp) - jf * dp_prev) / c;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
    }
    (p, p_prev, dp)
}

/// P_k^{(d)}(t) for t ∈ [−1, 1].
pub fn legendre_eval(d: usize, k: usize, t: f64) -> Result<f64> {
    let poly = LegendrePoly::new(d, k)?;
    check_closed("t", t, -1.0, 1.0, "[-1, 1]")?;
    Ok(poly.eval(t))
}

/// Symmetric tridiagonal Jacobi matrix whose eigenvalues are the zeros of P_k^{(d)}.
fn jacobi_matrix(d: usize, k: usize) -> DMatrix<f64> {
    let df = d as f64;
    // t·P_j = up(j)·P_{j+1} + down(j)·P_{j−1}
    let up = |j: usize| {
        if j == 0 {
            1.0
        } else {
            let jf = j as f64;
            (jf + df - 2.0) / (2.0 * jf + df - 2.0)
        }
    };
    let down = |j: usize| {
        let jf = j as f64;
        jf / (2.0 * jf + df - 2.0)
    };
    let mut m = DMatrix::zeros(k, k);
    for j in 1..k {
        let b = (up(j - 1) * down(j)).sqrt();
        m[(j, j - 1)] = b;
        m[(j - 1, j)] = b;
    }
    m
}

fn newton_polish(d: usize, k: usize, mut x: f64) -> f64 {
    for _ in 0..8 {
        let (p, _, dp) = eval_raw(d, k, x);
        if p == 0.0 || dp == 0.0 {
            break;
        }
        let next = x - p / dp;
        if (next - x).abs() <= 2.0 * f64::EPSILON * x.abs().max(1e-300) || !next.is_finite() {
            // pick the better of the two neighbours
            if eval_raw(d, k, next).0.abs() < p.abs() {
                x = next;
            }
            break;
        }
        x = next;
    }
    x
}

/// Zeros of P_k^{(d)} in ascending order via the Jacobi-matrix eigenvalues.
pub fn roots_jacobi(d: usize, k: usize) -> Vec<f64> {
    if k == 0 {
        return Vec::new();
    }
    if k == 1 {
        return vec![0.0];
    }
    let eig = SymmetricEigen::new(jacobi_matrix(d, k));
    let mut roots: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&x| newton_polish(d, k, x.clamp(-1.0, 1.0)))
        .collect();
    roots.sort_by(f64::total_cmp);
    symmetrize(&mut roots);
    roots
}

/// Zeros of P_k^{(d)} by sign-change bracketing on a polar-angle grid
/// (zeros are roughly equispaced in arccos t) followed by bisection.
pub fn roots_bisection(d: usize, k: usize) -> Vec<f64> {
    if k == 0 {
        return Vec::new();
    }
    let eval = |t: f64| eval_raw(d, k, t).0;
    let cells = 16 * k + 16;
    let grid: Vec<f64> = (0..=cells)
        .map(|i| -(std::f64::consts::PI * i as f64 / cells as f64).cos())
        .collect();
    let mut roots = Vec::with_capacity(k);
    let mut prev = eval(grid[0]);
    for w in grid.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let fhi = eval(hi);
        if prev == 0.0 {
            // exact zero at a grid node; it was recorded already
        } else if fhi == 0.0 {
            roots.push(hi);
        } else if prev.signum() != fhi.signum() {
            let mut flo = prev;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = eval(mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            let root = if eval(lo).abs() <= eval(hi).abs() {
                lo
            } else {
                hi
            };
            roots.push(root);
        }
        prev = fhi;
    }
    roots
}

/// Zeros of P_k^{(d)} come in ± pairs; make the computed set exactly symmetric.
fn symmetrize(roots: &mut [f64]) {
    let k = roots.len();
    for i in 0..k / 2 {
        let j = k - 1 - i;
        let m = 0.5 * (roots[j] - roots[i]);
        roots[i] = -m;
        roots[j] = m;
    }
    if k % 2 == 1 {
        roots[k / 2] = 0.0;
    }
}

/// Sorted zeros of P_k^{(d)}, k ≥ 1.
pub fn legendre_roots(d: usize, k: usize) -> Result<Vec<f64>> {
    LegendrePoly::new(d, k)?;
    if k == 0 {
        return Err(Error::InvalidParameter("degree 0 has no zeros".into()));
    }
    Ok(roots_jacobi(d, k))
}

/// True when each interval between consecutive `inner` points contains
/// exactly one `outer` point and the outer set has one more element.
pub fn roots_interlace(inner: &[f64], outer: &[f64]) -> bool {
    if outer.len() != inner.len() + 1 {
        return false;
    }
    (0..outer.len()).all(|i| {
        let lo = if i == 0 { -1.0 } else { inner[i - 1] };
        let hi = if i == inner.len() { 1.0 } else { inner[i] };
        outer[i] > lo && outer[i] < hi
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FreakHeight {
    pub height: f64,
    /// Lowest even degree whose polynomial vanishes here.
    pub degree: usize,
}

/// Positive zeros in (0, 1) of the even-degree dimension-(n+2) Legendre
/// polynomials up to `max_degree`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreakHeights {
    pub dim: usize,
    pub max_degree: usize,
    pub heights: Vec<FreakHeight>,
}

impl FreakHeights {
    pub fn values(&self) -> Vec<f64> {
        self.heights.iter().map(|h| h.height).collect()
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Largest gap in the partition of [lo, hi] by the heights inside (lo, hi).
    pub fn max_gap_in(&self, lo: f64, hi: f64) -> f64 {
        let mut edges = vec![lo];
        edges.extend(
            self.heights
                .iter()
                .map(|h| h.height)
                .filter(|&h| h > lo && h < hi),
        );
        edges.push(hi);
        edges.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max)
    }

    /// Whether `s` is within `tol` of a tabulated height.
    pub fn contains(&self, s: f64, tol: f64) -> bool {
        self.heights.iter().any(|h| (h.height - s).abs() <= tol)
    }
}

pub fn freak_heights(n: usize, max_degree: usize) -> Result<FreakHeights> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "freak heights need n ≥ 3, got {n}"
        )));
    }
    if max_degree < 2 || max_degree % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "max_degree must be an even integer ≥ 2, got {max_degree}"
        )));
    }
    if max_degree > MAX_FREAK_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "max_degree {max_degree} exceeds the validated limit {MAX_FREAK_DEGREE}"
        )));
    }
    let d = n + 2;
    let all: Vec<FreakHeight> = (2..=max_degree)
        .step_by(2)
        .flat_map(|degree| {
            roots_jacobi(d, degree)
                .into_iter()
                .filter(|&r| r > 0.0 && r < 1.0)
                .map(move |height| FreakHeight { height, degree })
        })
        .collect();
    Ok(FreakHeights {
        dim: n,
        max_degree,
        heights: merge_heights(all),
    })
}

/// Sorts and merges heights closer than [`DEDUP_TOL`], keeping the lowest degree.
fn merge_heights(mut all: Vec<FreakHeight>) -> Vec<FreakHeight> {
    all.sort_by(|a, b| a.height.total_cmp(&b.height).then(a.degree.cmp(&b.degree)));
    let mut heights: Vec<FreakHeight> = Vec::with_capacity(all.len());
    for h in all {
        match heights.last_mut() {
            Some(last) if (h.height - last.height).abs() <= DEDUP_TOL => {
                last.degree = last.degree.min(h.degree);
            }
            _ => heights.push(h),
        }
    }
    heights
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_at_one() {
        for d in 2..=10 {
            for k in 0..=20 {
                let v = legendre_eval(d, k, 1.0).unwrap();
                assert!((v - 1.0).abs() < 1e-12, "d={d} k={k}: {v}");
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        assert!((legendre_eval(5, 2, 0.2).unwrap() + 0.2).abs() < 1e-15);
        assert!((legendre_eval(3, 3, 0.5).unwrap() + 0.4375).abs() < 1e-15);
    }

    #[test]
    fn chebyshev_in_dimension_two() {
        for k in 0..15 {
            for i in 0..=20 {
                let t = -1.0 + i as f64 / 10.0;
                let want = (k as f64 * t.acos()).cos();
                assert!((legendre_eval(2, k, t).unwrap() - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn parity() {
        for d in 2..8 {
            for k in 0..12 {
                for &t in &[0.1, 0.37, 0.8, 0.99] {
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    let p = LegendrePoly::new(d, k).unwrap();
                    assert!((p.eval(-t) - sign * p.eval(t)).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let p = LegendrePoly::new(5, 7).unwrap();
        for &t in &[-0.9, -0.2, 0.3, 0.75] {
            let h = 1e-6;
            let fd = (p.eval(t + h) - p.eval(t - h)) / (2.0 * h);
            assert!((p.eval_with_derivative(t).1 - fd).abs() < 1e-6);
        }
        // P_k'(1) = k(k+d−2)/(d−1)
        assert!((p.eval_with_derivative(1.0).1 - 7.0 * 10.0 / 4.0).abs() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(legendre_eval(3, 2, 1.5).is_err());
        assert!(legendre_eval(1, 2, 0.5).is_err());
        assert!(legendre_roots(3, 0).is_err());
    }

    #[test]
    fn root_examples() {
        assert_eq!(legendre_roots(4, 1).unwrap(), vec![0.0]);
        let r = legendre_roots(5, 2).unwrap();
        let s = 1.0 / 5f64.sqrt();
        assert!((r[0] + s).abs() < 1e-15 && (r[1] - s).abs() < 1e-15);
        let r = legendre_roots(3, 2).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!((r[0] + s).abs() < 1e-15 && (r[1] - s).abs() < 1e-15);
    }

    #[test]
    fn root_residuals_and_interlacing() {
        for d in [2, 3, 4, 5, 7, 9] {
            let mut prev = legendre_roots(d, 1).unwrap();
            for k in 2..=60 {
                let roots = legendre_roots(d, k).unwrap();
                assert_eq!(roots.len(), k);
                let p = LegendrePoly::new(d, k).unwrap();
                for &r in &roots {
                    assert!(r > -1.0 && r < 1.0);
                    assert!(
                        p.eval(r).abs() < 1e-12,
                        "d={d} k={k} r={r} res={}",
                        p.eval(r)
                    );
                }
                assert!(roots.windows(2).all(|w| w[0] < w[1]), "not simple");
                assert!(roots_interlace(&prev, &roots), "interlacing d={d} k={k}");
                prev = roots;
            }
        }
    }

    #[test]
    fn jacobi_and_bisection_agree() {
        for d in [2, 3, 5, 8] {
            for k in [1, 2, 3, 8, 21, 40, 100] {
                let a = roots_jacobi(d, k);
                let b = roots_bisection(d, k);
                assert_eq!(a.len(), b.len(), "d={d} k={k}");
                for (x, y) in a.iter().zip(&b) {
                    assert!((x - y).abs() < 1e-11, "d={d} k={k}: {x} vs {y}");
                }
            }
        }
    }

    #[test]
    fn freak_height_examples() {
        let f = freak_heights(3, 2).unwrap();
        assert_eq!(f.len(), 1);
        assert!((f.heights[0].height - 0.447_213_595_5).abs() < 1e-10);
        assert_eq!(f.heights[0].degree, 2);

        let f = freak_heights(3, 4).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.contains(1.0 / 5f64.sqrt(), 1e-12));
        let p4 = LegendrePoly::new(5, 4).unwrap();
        for h in f.heights.iter().filter(|h| h.degree == 4) {
            assert!(p4.eval(h.height).abs() < 1e-12);
        }
    }

    #[test]
    fn freak_heights_invariants() {
        for n in 3..=6 {
            let f = freak_heights(n, 30).unwrap();
            let v = f.values();
            assert!(v.windows(2).all(|w| w[1] - w[0] > DEDUP_TOL));
            for h in &f.heights {
                assert!(h.height > 0.0 && h.height < 1.0);
                assert!(h.degree % 2 == 0);
                let p = LegendrePoly::new(n + 2, h.degree).unwrap();
                assert!(p.eval(h.height).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn freak_height_errors() {
        assert!(freak_heights(3, 3).is_err());
        assert!(freak_heights(3, 0).is_err());
        assert!(freak_heights(2, 4).is_err());
        assert!(freak_heights(3, 202).is_err());
        assert!(freak_heights(3, 200).is_ok());
    }

    #[test]
    fn shared_zeros_are_merged() {
        // T_2 and T_6 share cos(π/4); the merge keeps one entry at degree 2.
        let tag = |k: usize| {
            roots_jacobi(2, k)
                .into_iter()
                .filter(|&r| r > 0.0)
                .map(move |height| FreakHeight { height, degree: k })
        };
        let merged = merge_heights(tag(6).chain(tag(2)).collect());
        assert_eq!(merged.len(), 3);
        let shared = merged
            .iter()
            .find(|h| (h.height - 0.5f64.sqrt()).abs() < 1e-12)
            .unwrap();
        assert_eq!(shared.degree, 2);
    }
}
