//! The cap transform T_s, which maps a function F on S^{n−1} to
//! u ↦ ∫_{C_s(u)} F dP, and its action on zonal functions.
//!
//! For the zonal function v ↦ P_k^{(n)}(e·v) the transform returns
//! λ_k(s)·P_k^{(n)}(e·u), where
//!
//! ```text
//! λ_k(s) = ∫_s^1 P_k^{(n)}(t) (1−t²)^{(n−3)/2} dt / ∫_{−1}^1 (1−t²)^{(n−3)/2} dt.
//! ```
//!
//! With the normalized measure P this gives λ_0(s) = P(C_s).
//!
//! The integral is evaluated in the polar angle θ = arccos t, where the
//! integrand P_k(cos θ)·sin^{n−2}θ is smooth for every n, so one
//! Gauss–Legendre rule serves both parities of n.

use serde::{Deserialize, Serialize};

use crate::error::{check_open, Error, Result};
use crate::orthopoly::LegendrePoly;
use crate::quadrature::gauss_legendre;
use crate::sphere::{check_dim, dot, sphere_weight_total, UnitVector};

/// Default Gauss order for degree `k`.
pub fn default_order(k: usize) -> usize {
    40.max(4 * k)
}

fn check_dims(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "sphere dimension n={n} < 2"
        )));
    }
    Ok(())
}

/// ∫_0^{θ_end} P_k(cos θ) sin^{n−2}θ dθ with an `order`-point rule.
fn polar_integral(n: usize, k: usize, theta_end: f64, order: usize) -> f64 {
    let poly = LegendrePoly::new(n, k).expect("dimension checked");
    let rule = gauss_legendre(order);
    let power = n as i32 - 2;
    rule.integrate(0.0, theta_end, |theta| {
        poly.eval(theta.cos()) * theta.sin().powi(power)
    })
}

/// λ_k(s) with an explicit Gauss order.
pub fn funk_hecke_lambda_with_order(n: usize, k: usize, s: f64, order: usize) -> Result<f64> {
    check_dims(n)?;
    check_open("cap height", s, -1.0, 1.0, "(-1, 1)")?;
    if order == 0 {
        return Err(Error::InvalidParameter(
            "quadrature order must be positive".into(),
        ));
    }
    Ok(polar_integral(n, k, s.acos(), order) / sphere_weight_total(n))
}

/// Eigenvalue of the height-`s` cap transform on degree-`k` zonal functions of S^{n−1}.
pub fn funk_hecke_lambda(n: usize, k: usize, s: f64) -> Result<f64> {
    funk_hecke_lambda_with_order(n, k, s, default_order(k))
}

/// T_s applied to v ↦ P_k^{(n)}(axis·v), evaluated at `u`.
pub fn transform_apply(
    n: usize,
    k: usize,
    s: f64,
    axis: &UnitVector,
    u: &UnitVector,
) -> Result<f64> {
    check_dim(n, axis.dim())?;
    check_dim(n, u.dim())?;
    let lambda = funk_hecke_lambda(n, k, s)?;
    let t = dot(axis.as_slice(), u.as_slice()).clamp(-1.0, 1.0);
    Ok(lambda * LegendrePoly::new(n, k)?.eval(t))
}

/// ∫ P_k^{(n)}(e·v) dP(v) for odd `k`; zero up to rounding.
pub fn odd_mean_zero_check(n: usize, k: usize) -> Result<f64> {
    check_dims(n)?;
    if k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "mean-zero identity is stated for odd degrees, got k={k}"
        )));
    }
    Ok(polar_integral(n, k, std::f64::consts::PI, default_order(k)) / sphere_weight_total(n))
}

/// A computed eigenvalue with the parameters that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CapEigenvalue {
    pub n: usize,
    pub k: usize,
    pub s: f64,
    pub lambda: f64,
}

impl CapEigenvalue {
    pub fn compute(n: usize, k: usize, s: f64) -> Result<Self> {
        Ok(Self {
            n,
            k,
            s,
            lambda: funk_hecke_lambda(n, k, s)?,
        })
    }
}
