//! Scalars the vector types are generic over: plain floats and truncated
//! series (so the same frame code yields values or Taylor jets).

use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::series::Series;

/// A commutative ring element with division and square root.
pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Embeds a float.
    fn from_f64(x: f64) -> Self;
    /// Square root (of the leading value, extended to jets).
    fn sqrt(self) -> Self;
    /// Leading value: the float itself or the constant term.
    fn value(&self) -> f64;

    /// Additive identity.
    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    /// Multiplicative identity.
    fn one() -> Self {
        Self::from_f64(1.0)
    }
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn sqrt(self) -> Self {
        libm::sqrt(self)
    }
    fn value(&self) -> f64 {
        *self
    }
}

impl Scalar for Series {
    fn from_f64(x: f64) -> Self {
        Series::constant(x)
    }
    fn sqrt(self) -> Self {
        Series::sqrt(&self)
    }
    fn value(&self) -> f64 {
        Series::value(self)
    }
}
