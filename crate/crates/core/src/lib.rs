//! Ruled and developable surfaces as curves of unit dual vectors.
//!
//! A ruled surface `F(s,t) = r(s) + t·e(s)` is the curve of oriented lines
//! `v̌(s) = e(s) + ε r(s)×e(s)`. This crate computes its dual Frenet frame and
//! complete invariants (dual curvature `κ₀ + εκ₁`, dual torsion `τ₀ + ετ₁`),
//! locates and classifies singular points, and rebuilds surfaces from
//! prescribed invariants.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod align;
pub mod classification;
pub mod curve;
pub mod error;
pub mod geometry;
pub mod numeric;
#[cfg(any(test, feature = "oracles"))]
pub mod oracles;
pub mod polynomial;
pub mod reconstruction;
pub mod scalar;
pub mod series;
pub mod tolerance;

pub use algebra::{AlgebraError, DualNumber, DualQuaternion, DualVector, Quaternion, UnitDualVector, Vec3};
pub use curve::{Interval, RuledCurve};
pub use error::GeometryError;
pub use polynomial::Polynomial;
pub use series::Series;
