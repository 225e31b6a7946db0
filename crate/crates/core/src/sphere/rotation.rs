use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{check_dim, PointSet, UnitVector};
use crate::error::{Error, Result};

const ORTHOGONALITY_TOL: f64 = 1e-10;

/// A proper rotation of R^n: RᵀR = I and det R = +1, both within 1e-10.
#[derive(Debug, Clone, PartialEq)]
pub struct Rotation {
    matrix: DMatrix<f64>,
}

impl Rotation {
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() < 2 {
            return Err(Error::NotARotation(format!(
                "shape {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let n = matrix.nrows();
        let gram = matrix.transpose() * &matrix;
        let off = (&gram - DMatrix::<f64>::identity(n, n)).amax();
        if off > ORTHOGONALITY_TOL {
            return Err(Error::NotARotation(format!("|RᵀR − I| = {off:e}")));
        }
        let det = matrix.determinant();
        if (det - 1.0).abs() > ORTHOGONALITY_TOL {
            return Err(Error::NotARotation(format!("det = {det}")));
        }
        Ok(Self { matrix })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotARotation("ragged rows".into()));
        }
        Self::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: DMatrix::identity(n, n),
        }
    }

    /// Counter-clockwise rotation of the plane by `theta`.
    pub fn planar(theta: f64) -> Self {
        Self::givens(2, 0, 1, theta).expect("valid plane")
    }

    /// Rotation by `theta` in the (i, j) coordinate plane.
    pub fn givens(n: usize, i: usize, j: usize, theta: f64) -> Result<Self> {
        if i >= n || j >= n || i == j {
            return Err(Error::InvalidParameter(format!(
                "bad rotation plane ({i}, {j}) in n={n}"
            )));
        }
        let mut m = DMatrix::identity(n, n);
        let (s, c) = theta.sin_cos();
        m[(i, i)] = c;
        m[(j, j)] = c;
        m[(i, j)] = -s;
        m[(j, i)] = s;
        Ok(Self { matrix: m })
    }

    /// Haar-distributed rotation from the QR factorization of a Gaussian matrix.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = DMatrix::from_fn(n, n, |_, _| StandardNormal.sample(&mut rng));
        let qr = g.qr();
        let (mut q, r) = (qr.q(), qr.r());
        for k in 0..n {
            if r[(k, k)] < 0.0 {
                q.column_mut(k).neg_mut();
            }
        }
        if q.determinant() < 0.0 {
            q.column_mut(0).neg_mut();
        }
        Self { matrix: q }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn inverse(&self) -> Self {
        Self {
            matrix: self.matrix.transpose(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Rotation) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self {
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub(crate) fn apply_slice(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn apply(&self, v: &UnitVector) -> Result<UnitVector> {
        check_dim(self.dim(), v.dim())?;
        UnitVector::new(self.apply_slice(v.as_slice()))
    }
}

/// Maps every point of `ps` through `rho`, preserving order and provenance.
pub fn rotate(ps: &PointSet, rho: &Rotation) -> Result<PointSet> {
    check_dim(ps.dim(), rho.dim())?;
    let points = ps
        .iter()
        .map(|p| UnitVector::new(rho.apply_slice(p)))
        .collect::<Result<Vec<_>>>()?;
    PointSet::new(ps.dim(), points, ps.provenance().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{dot, generate_uniform, UniformMethod};
    use std::f64::consts::PI;

    #[test]
    fn identity_is_exact() {
        let ps = generate_uniform(4, 50, UniformMethod::Random, 3).unwrap();
        let out = rotate(&ps, &Rotation::identity(4)).unwrap();
        assert_eq!(out, ps);
    }

    #[test]
    fn half_turn_twice_is_identity() {
        let ps = generate_uniform(2, 64, UniformMethod::KroneckerS1, 0).unwrap();
        let r = Rotation::planar(PI);
        let twice = rotate(&rotate(&ps, &r).unwrap(), &r).unwrap();
        for (a, b) in ps.iter().zip(twice.iter()) {
            for (x, y) in a.iter().zip(b) {
                assert!((x - y).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn random_rotation_preserves_dot_products() {
        for n in 2..7 {
            let r = Rotation::random(n, 17 + n as u64);
            assert!(Rotation::new(r.matrix().clone()).is_ok());
            let ps = generate_uniform(n, 20, UniformMethod::Random, 5).unwrap();
            let rs = rotate(&ps, &r).unwrap();
            for i in 0..ps.len() {
                for j in 0..ps.len() {
                    let before = dot(ps.point(i), ps.point(j));
                    let after = dot(rs.point(i), rs.point(j));
                    assert!((before - after).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn rejects_reflections_and_shears() {
        let reflect = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
        assert!(matches!(
            Rotation::new(reflect),
            Err(Error::NotARotation(_))
        ));
        let shear = DMatrix::from_row_slice(2, 2, &[1.0, 0.1, 0.0, 1.0]);
        assert!(Rotation::new(shear).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let ps = generate_uniform(3, 4, UniformMethod::FibonacciS2, 0).unwrap();
        assert!(matches!(
            rotate(&ps, &Rotation::identity(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
