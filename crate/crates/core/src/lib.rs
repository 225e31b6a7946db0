//! Fixed-size spherical caps, the Legendre/Funk–Hecke machinery behind them,
//! and densities that caps of one size cannot distinguish from uniform.
//!
//! * [`sphere`]: unit vectors, caps, normalized cap measure, rotations, point sets.
//! * [`orthopoly`]: dimension-d Legendre polynomials, their roots, freak heights.
//! * [`cap_transform`]: eigenvalues λ_k(s) of the fixed-height cap transform.
//! * [`densities`]: planar and zonal densities with uniform cap probabilities,
//!   and deterministic sequences equidistributed for them.
//! * [`discrepancy`]: cap counts, exact arc sweeps, sampled cap search.
//!
//! ```
//! use capfreak::cap_transform::funk_hecke_lambda;
//! use capfreak::orthopoly::freak_heights;
//!
//! let s = freak_heights(3, 2)?.values()[0];
//! assert!((s - 1.0 / 5f64.sqrt()).abs() < 1e-12);
//! assert!(funk_hecke_lambda(3, 3, s)?.abs() < 1e-12);
//! # Ok::<(), capfreak::Error>(())
//! ```

pub mod cap_transform;
pub mod densities;
pub mod discrepancy;
pub mod error;
pub mod lowdisc;
pub mod orthopoly;
pub mod quadrature;
pub mod sphere;

pub use error::{Error, Result};
