use core::ops::{Add, Div, Mul, Neg, Sub};

use super::{AlgebraError, Vec3};
use crate::scalar::Scalar;
use crate::series::Series;

/// A dual number `real + ε·dual` with `ε² = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DualNumber<T = f64> {
    pub real: T,
    pub dual: T,
}

impl<T> DualNumber<T> {
    pub const fn new(real: T, dual: T) -> Self {
        DualNumber { real, dual }
    }
}

impl<T: Scalar> DualNumber<T> {
    pub fn from_real(real: T) -> Self {
        DualNumber::new(real, T::zero())
    }

    pub fn zero() -> Self {
        DualNumber::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        DualNumber::new(T::one(), T::zero())
    }

    /// `1/(a + εb) = 1/a − εb/a²`; the real part must be invertible.
    pub fn recip(self) -> Self {
        let inv = T::one() / self.real;
        DualNumber::new(inv, -self.dual * inv * inv)
    }

    /// `√(a + εb) = √a + εb/(2√a)` without checking the sign of `a`.
    pub fn sqrt_unchecked(self) -> Self {
        let r = self.real.sqrt();
        DualNumber::new(r, self.dual / (r + r))
    }

    pub fn value(&self) -> DualNumber<f64> {
        DualNumber::new(self.real.value(), self.dual.value())
    }
}

impl DualNumber<f64> {
    pub const ZERO: DualNumber = DualNumber::new(0.0, 0.0);
    pub const ONE: DualNumber = DualNumber::new(1.0, 0.0);
    pub const EPSILON: DualNumber = DualNumber::new(0.0, 1.0);

    /// Principal square root; defined only for a positive real part.
    pub fn sqrt(self) -> Result<Self, AlgebraError> {
        if self.real > 0.0 {
            Ok(self.sqrt_unchecked())
        } else {
            Err(AlgebraError::NonPositiveReal(self.real))
        }
    }

    pub fn is_invertible(self) -> bool {
        self.real != 0.0
    }

    pub fn abs_max(self) -> f64 {
        self.real.abs().max(self.dual.abs())
    }
}

impl<T: Scalar> Add for DualNumber<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        DualNumber::new(self.real + o.real, self.dual + o.dual)
    }
}

impl<T: Scalar> Sub for DualNumber<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        DualNumber::new(self.real - o.real, self.dual - o.dual)
    }
}

impl<T: Scalar> Neg for DualNumber<T> {
    type Output = Self;
    fn neg(self) -> Self {
        DualNumber::new(-self.real, -self.dual)
    }
}

impl<T: Scalar> Mul for DualNumber<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        DualNumber::new(self.real * o.real, self.real * o.dual + self.dual * o.real)
    }
}

impl<T: Scalar> Div for DualNumber<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

/// A dual vector `v₀ + εv₁ ∈ 𝔻³`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DualVector<T = f64> {
    pub v0: Vec3<T>,
    pub v1: Vec3<T>,
}

impl<T> DualVector<T> {
    pub const fn new(v0: Vec3<T>, v1: Vec3<T>) -> Self {
        DualVector { v0, v1 }
    }
}

impl<T: Scalar> DualVector<T> {
    pub fn zero() -> Self {
        DualVector::new(Vec3::zero(), Vec3::zero())
    }

    /// 𝔻-bilinear dot product: `(u₀·v₀, u₀·v₁ + u₁·v₀)`.
    pub fn dot(self, o: Self) -> DualNumber<T> {
        DualNumber::new(self.v0.dot(o.v0), self.v0.dot(o.v1) + self.v1.dot(o.v0))
    }

    /// 𝔻-bilinear cross product: `u₀×v₀ + ε(u₀×v₁ + u₁×v₀)`.
    pub fn cross(self, o: Self) -> Self {
        DualVector::new(self.v0.cross(o.v0), self.v0.cross(o.v1) + self.v1.cross(o.v0))
    }

    /// Multiplication by a dual scalar.
    pub fn scale(self, k: DualNumber<T>) -> Self {
        DualVector::new(self.v0 * k.real, self.v1 * k.real + self.v0 * k.dual)
    }

    /// Dual length `√(v̌·v̌)`; the direction part must be nonzero.
    pub fn norm(self) -> DualNumber<T> {
        self.dot(self).sqrt_unchecked()
    }

    /// `v̌/|v̌|`, a unit dual vector whenever `v₀ ≠ 0`.
    pub fn normalized(self) -> Self {
        self.scale(self.norm().recip())
    }

    pub fn value(&self) -> DualVector<f64> {
        DualVector::new(self.v0.value(), self.v1.value())
    }
}

impl DualVector<f64> {
    /// Defect from unit length: `max(| |v₀|² − 1 |, |v₀·v₁|)`.
    pub fn unit_defect(self) -> f64 {
        let d = self.dot(self);
        (d.real - 1.0).abs().max((0.5 * d.dual).abs())
    }

    pub fn to_series(self) -> DualVector<Series> {
        DualVector::new(self.v0.to_series(), self.v1.to_series())
    }
}

impl DualVector<Series> {
    pub fn coeff(&self, k: usize) -> DualVector {
        DualVector::new(self.v0.coeff(k), self.v1.coeff(k))
    }

    pub fn derivative_at(&self, k: usize) -> DualVector {
        DualVector::new(self.v0.derivative_at(k), self.v1.derivative_at(k))
    }

    pub fn derivative(&self) -> Self {
        DualVector::new(self.v0.derivative(), self.v1.derivative())
    }

    pub fn eval(&self, dx: f64) -> DualVector {
        DualVector::new(self.v0.eval(dx), self.v1.eval(dx))
    }

    pub fn compose(&self, inner: &Series) -> Self {
        DualVector::new(self.v0.compose(inner), self.v1.compose(inner))
    }

    pub fn truncate(&self, len: usize) -> Self {
        DualVector::new(self.v0.truncate(len), self.v1.truncate(len))
    }

    pub fn len(&self) -> usize {
        self.v0.len().min(self.v1.len())
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl<T: Scalar> Add for DualVector<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        DualVector::new(self.v0 + o.v0, self.v1 + o.v1)
    }
}

impl<T: Scalar> Sub for DualVector<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        DualVector::new(self.v0 - o.v0, self.v1 - o.v1)
    }
}

impl<T: Scalar> Neg for DualVector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        DualVector::new(-self.v0, -self.v1)
    }
}

impl<T: Scalar> Mul<DualNumber<T>> for DualVector<T> {
    type Output = Self;
    fn mul(self, k: DualNumber<T>) -> Self {
        self.scale(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const E1: Vec3 = Vec3::X;
    const E2: Vec3 = Vec3::Y;
    const E3: Vec3 = Vec3::Z;

    #[test]
    fn dual_mul_examples() {
        let x = DualNumber::new(0.7, -1.3);
        assert_eq!(DualNumber::ONE * x, x);
        assert_eq!(DualNumber::EPSILON * DualNumber::EPSILON, DualNumber::ZERO);
        assert_eq!(DualNumber::new(2.0, 3.0) * DualNumber::new(4.0, 5.0), DualNumber::new(8.0, 22.0));
    }

    #[test]
    fn dual_sqrt_examples() {
        assert_eq!(DualNumber::new(1.0, 0.0).sqrt(), Ok(DualNumber::new(1.0, 0.0)));
        assert_eq!(DualNumber::new(4.0, 4.0).sqrt(), Ok(DualNumber::new(2.0, 1.0)));
        for t in [-3.0, 0.0, 0.25, 10.0] {
            assert_eq!(DualNumber::new(1.0, 2.0 * t).sqrt(), Ok(DualNumber::new(1.0, t)));
        }
        assert_eq!(DualNumber::new(0.0, 1.0).sqrt(), Err(AlgebraError::NonPositiveReal(0.0)));
        assert!(DualNumber::new(-1.0, 1.0).sqrt().is_err());
    }

    #[test]
    fn dual_dot_examples() {
        let a = DualVector::new(E1, Vec3::zero());
        assert_eq!(a.dot(a), DualNumber::new(1.0, 0.0));
        let u = DualVector::new(E1, E2);
        let v = DualVector::new(E2, E1);
        assert_eq!(u.dot(v), DualNumber::new(0.0, 2.0));
        let line = DualVector::new(E3, Vec3::new(2.0, -1.0, 0.0));
        assert_eq!(line.dot(line), DualNumber::new(1.0, 0.0));
    }

    #[test]
    fn dual_cross_examples() {
        let a = DualVector::new(E1, Vec3::zero());
        let b = DualVector::new(E2, Vec3::zero());
        assert_eq!(a.cross(b), DualVector::new(E3, Vec3::zero()));
        let v = DualVector::new(Vec3::new(0.3, -2.0, 1.0), Vec3::new(1.0, 1.0, 4.0));
        assert_eq!(v.cross(v), DualVector::zero());
        let c = DualVector::new(E1, E3);
        assert_eq!(c.cross(b), DualVector::new(E3, -E1));
    }

    #[test]
    fn normalized_is_unit() {
        let v = DualVector::new(Vec3::new(3.0, 0.0, 4.0), Vec3::new(1.0, 2.0, -1.0));
        let u = v.normalized();
        assert!(u.unit_defect() < 1e-15);
        // the same line: direction parallel and moment unchanged up to scaling
        assert!((u.v0 - Vec3::new(0.6, 0.0, 0.8)).max_abs() < 1e-15);
    }
}
