//! Dual numbers, quaternions, dual quaternions and dual vectors, and the
//! correspondence between unit dual vectors and oriented lines.

mod dual;
mod line;
mod quaternion;
mod vec3;

pub use dual::{DualNumber, DualVector};
pub use line::UnitDualVector;
pub use quaternion::{DualQuaternion, Quaternion};
pub use vec3::Vec3;

/// Errors raised by algebraic operations with preconditions.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    /// Square root of a dual number whose real part is not positive.
    #[error("dual square root needs a positive real part, got {0}")]
    NonPositiveReal(f64),
    /// A dual quaternion or dual vector expected to be unit is not.
    #[error("not a unit element (defect {0:e})")]
    NotUnit(f64),
    /// A line direction of zero length.
    #[error("line direction has zero length")]
    ZeroDirection,
}
