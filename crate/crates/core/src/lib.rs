//! Exact-arithmetic engine for G2 structures on homogeneous 7-dimensional
//! frames and the almost contact metric structures they induce.
//!
//! The pipeline: structure constants -> Levi-Civita connection -> G2 cross
//! product -> induced `(phi, xi, eta, g)` -> covariant derivative of the
//! fundamental 2-form -> quadratic invariants -> class verdicts and a
//! theorem audit. Everything runs over exact rationals by default; an `f64`
//! backend with a configurable tolerance handles irrational inputs.

pub mod acms;
pub mod analysis;
pub mod check;
pub mod classify;
pub mod exterior;
pub mod frame;
pub mod g2;
pub mod invariants;
pub mod manifold;
pub mod nablaphi;
pub mod rng;
pub mod scalar;

#[cfg(test)]
pub(crate) mod testutil;

pub use scalar::{Exact, Scalar};
