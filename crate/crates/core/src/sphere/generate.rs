use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use super::{PointSet, Provenance, UnitVector};
use crate::error::{Error, Result};
use crate::lowdisc;

/// Reference sequences known to be uniformly distributed for P.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UniformMethod {
    /// Normalized Gaussian vectors from a seeded ChaCha8 stream.
    Random,
    /// Fibonacci grid on S²; N fixes the whole grid, so it is not a prefix sequence.
    FibonacciS2,
    /// Angles 2π{jφ}, j = seed, seed+1, …
    KroneckerS1,
    /// Coordinate-wise inverse normal CDF of a Halton point, normalized.
    HaltonInverse,
}

impl UniformMethod {
    pub fn name(self) -> &'static str {
        match self {
            UniformMethod::Random => "random",
            UniformMethod::FibonacciS2 => "fibonacci_s2",
            UniformMethod::KroneckerS1 => "kronecker_s1",
            UniformMethod::HaltonInverse => "halton_inverse",
        }
    }
}

impl fmt::Display for UniformMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UniformMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(UniformMethod::Random),
            "fibonacci_s2" | "fibonacci" => Ok(UniformMethod::FibonacciS2),
            "kronecker_s1" | "kronecker" => Ok(UniformMethod::KroneckerS1),
            "halton_inverse" | "halton" => Ok(UniformMethod::HaltonInverse),
            other => Err(Error::InvalidParameter(format!(
                "unknown uniform method {other:?}"
            ))),
        }
    }
}

/// Deterministic uniform point set of `count` points on S^{n−1}.
pub fn generate_uniform(
    n: usize,
    count: usize,
    method: UniformMethod,
    seed: u64,
) -> Result<PointSet> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "sphere dimension n={n} < 2"
        )));
    }
    let provenance = Provenance::new(method.name(), seed);
    match method {
        UniformMethod::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut points = Vec::with_capacity(count);
            while points.len() < count {
                let g: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
                // A draw this close to the origin has probability ~0; redraw.
                if let Ok(v) = UnitVector::new(g) {
                    points.push(v);
                }
            }
            PointSet::new(n, points, provenance)
        }
        UniformMethod::FibonacciS2 => {
            if n != 3 {
                return Err(Error::IncompatibleMethod {
                    method: method.name(),
                    dim: n,
                });
            }
            let points = (0..count)
                .map(|i| UnitVector::new(lowdisc::fibonacci_sphere(i, count).to_vec()))
                .collect::<Result<Vec<_>>>()?;
            PointSet::new(3, points, provenance)
        }
        UniformMethod::KroneckerS1 => {
            if n != 2 {
                return Err(Error::IncompatibleMethod {
                    method: method.name(),
                    dim: n,
                });
            }
            let angles: Vec<f64> = (0..count as u64)
                .map(|i| TAU * lowdisc::kronecker_golden(seed + i))
                .collect();
            Ok(PointSet::from_angles(&angles, provenance))
        }
        UniformMethod::HaltonInverse => {
            if lowdisc::nth_prime(n - 1).is_none() {
                return Err(Error::IncompatibleMethod {
                    method: method.name(),
                    dim: n,
                });
            }
            let points = (0..count as u64)
                .map(|i| halton_direction(seed + i + 1, n))
                .collect::<Result<Vec<_>>>()?;
            PointSet::new(n, points, provenance)
        }
    }
}

/// Direction from the Halton point `index` (≥ 1) via the inverse normal CDF.
pub(crate) fn halton_direction(index: u64, n: usize) -> Result<UnitVector> {
    let normal = Normal::standard();
    let g = lowdisc::halton(index, n)
        .into_iter()
        .map(|x| normal.inverse_cdf(x.max(f64::MIN_POSITIVE)))
        .collect();
    UnitVector::new(g)
}
