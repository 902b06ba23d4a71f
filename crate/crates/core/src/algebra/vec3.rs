use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::scalar::Scalar;
use crate::series::Series;

/// A 3-vector over a scalar ring.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Vec3<T = f64> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> Vec3<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Vec3 { x, y, z }
    }

    /// Applies `f` to each component.
    pub fn map<U>(self, mut f: impl FnMut(T) -> U) -> Vec3<U> {
        Vec3::new(f(self.x), f(self.y), f(self.z))
    }
}

impl<T: Scalar> Vec3<T> {
    pub fn zero() -> Self {
        Vec3::new(T::zero(), T::zero(), T::zero())
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm_squared(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.norm_squared().sqrt()
    }

    pub fn scale(self, k: T) -> Self {
        Vec3::new(self.x * k, self.y * k, self.z * k)
    }

    /// Leading values of each component.
    pub fn value(&self) -> Vec3<f64> {
        Vec3::new(self.x.value(), self.y.value(), self.z.value())
    }
}

impl Vec3<f64> {
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    /// Unit vector in the same direction (NaN for zero input).
    pub fn normalized(self) -> Self {
        self.scale(1.0 / self.norm())
    }

    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }

    /// Constant series in each component.
    pub fn to_series(self) -> Vec3<Series> {
        self.map(Series::constant)
    }
}

impl Vec3<Series> {
    /// Coefficient of `δᵏ` in each component.
    pub fn coeff(&self, k: usize) -> Vec3 {
        Vec3::new(self.x.coeff(k), self.y.coeff(k), self.z.coeff(k))
    }

    /// `k`-th derivative at the base point.
    pub fn derivative_at(&self, k: usize) -> Vec3 {
        Vec3::new(self.x.derivative_at(k), self.y.derivative_at(k), self.z.derivative_at(k))
    }

    pub fn derivative(&self) -> Self {
        self.map(|c| c.derivative())
    }

    pub fn eval(&self, dx: f64) -> Vec3 {
        Vec3::new(self.x.eval(dx), self.y.eval(dx), self.z.eval(dx))
    }

    pub fn compose(&self, inner: &Series) -> Self {
        self.map(|c| c.compose(inner))
    }

    pub fn truncate(&self, len: usize) -> Self {
        self.map(|c| c.truncate(len))
    }

    /// Fewest known coefficients among the components.
    pub fn len(&self) -> usize {
        self.x.len().min(self.y.len()).min(self.z.len())
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl<T: Scalar> Add for Vec3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Scalar> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Scalar> Neg for Vec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Scalar> Mul<T> for Vec3<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        self.scale(k)
    }
}

impl<T: Scalar> AddAssign for Vec3<T> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Scalar> SubAssign for Vec3<T> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}
