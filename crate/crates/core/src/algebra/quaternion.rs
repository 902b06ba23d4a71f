use core::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, DualNumber, DualVector, Vec3};
use crate::tolerance::TOL_UNIT;

/// A quaternion `w + xi + yj + zk`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Default for Quaternion {
    fn default() -> Self {
        Quaternion::IDENTITY
    }
}

impl Quaternion {
    pub const IDENTITY: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Pure quaternion with vector part `v`.
    pub fn pure(v: Vec3) -> Self {
        Quaternion::new(0.0, v.x, v.y, v.z)
    }

    /// Unit quaternion rotating by `angle` about the unit `axis`.
    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Self {
        let (s, c) = libm::sincos(0.5 * angle);
        let a = axis.normalized();
        Quaternion::new(c, s * a.x, s * a.y, s * a.z)
    }

    pub fn vector(self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_squared(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.norm_squared())
    }

    pub fn scale(self, k: f64) -> Self {
        Quaternion::new(self.w * k, self.x * k, self.y * k, self.z * k)
    }

    pub fn dot(self, o: Self) -> f64 {
        self.w * o.w + self.x * o.x + self.y * o.y + self.z * o.z
    }

    /// Rotation `x ↦ q x q̄` for a unit quaternion.
    pub fn rotate(self, v: Vec3) -> Vec3 {
        (self * Quaternion::pure(v) * self.conj()).vector()
    }

    /// Row-major rotation matrix of a unit quaternion.
    pub fn to_matrix(self) -> [[f64; 3]; 3] {
        let Quaternion { w, x, y, z } = self;
        [
            [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
            [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
            [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
        ]
    }

    /// Unit quaternion of a rotation matrix (Shepperd's branch selection).
    pub fn from_matrix(m: [[f64; 3]; 3]) -> Self {
        let tr = m[0][0] + m[1][1] + m[2][2];
        let q = if tr > m[0][0].max(m[1][1]).max(m[2][2]) {
            let s = 2.0 * libm::sqrt(1.0 + tr);
            Quaternion::new(0.25 * s, (m[2][1] - m[1][2]) / s, (m[0][2] - m[2][0]) / s, (m[1][0] - m[0][1]) / s)
        } else if m[0][0] >= m[1][1] && m[0][0] >= m[2][2] {
            let s = 2.0 * libm::sqrt(1.0 + m[0][0] - m[1][1] - m[2][2]);
            Quaternion::new((m[2][1] - m[1][2]) / s, 0.25 * s, (m[0][1] + m[1][0]) / s, (m[0][2] + m[2][0]) / s)
        } else if m[1][1] >= m[2][2] {
            let s = 2.0 * libm::sqrt(1.0 + m[1][1] - m[0][0] - m[2][2]);
            Quaternion::new((m[0][2] - m[2][0]) / s, (m[0][1] + m[1][0]) / s, 0.25 * s, (m[1][2] + m[2][1]) / s)
        } else {
            let s = 2.0 * libm::sqrt(1.0 + m[2][2] - m[0][0] - m[1][1]);
            Quaternion::new((m[1][0] - m[0][1]) / s, (m[0][2] + m[2][0]) / s, (m[1][2] + m[2][1]) / s, 0.25 * s)
        };
        q.scale(1.0 / q.norm())
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

/// A dual quaternion `q₀ + εq₁`. Unit ones represent rigid motions.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DualQuaternion {
    pub q0: Quaternion,
    pub q1: Quaternion,
}

impl DualQuaternion {
    pub const IDENTITY: DualQuaternion = DualQuaternion::new(Quaternion::IDENTITY, Quaternion::ZERO);

    pub const fn new(q0: Quaternion, q1: Quaternion) -> Self {
        DualQuaternion { q0, q1 }
    }

    /// Motion `x ↦ q x q̄ + t` for a unit quaternion `q`.
    pub fn from_rotation_translation(q: Quaternion, t: Vec3) -> Self {
        DualQuaternion::new(q, (Quaternion::pure(t) * q).scale(0.5))
    }

    pub fn from_translation(t: Vec3) -> Self {
        DualQuaternion::from_rotation_translation(Quaternion::IDENTITY, t)
    }

    /// The conjugate `q̄₀ + εq̄₁`.
    pub fn conj(self) -> Self {
        DualQuaternion::new(self.q0.conj(), self.q1.conj())
    }

    /// `q̌q̌* = |q₀|² + ε·2Re[q₁q̄₀]`.
    pub fn norm_squared(self) -> DualNumber {
        DualNumber::new(self.q0.norm_squared(), 2.0 * self.q1.dot(self.q0))
    }

    /// Largest deviation of `q̌q̌*` from 1.
    pub fn unit_defect(self) -> f64 {
        let n = self.norm_squared();
        (n.real - 1.0).abs().max(n.dual.abs())
    }

    pub fn is_unit(self) -> bool {
        self.unit_defect() <= TOL_UNIT
    }

    /// Nearest unit dual quaternion: `q₀` projected to the unit sphere and
    /// the `Re[q₁q̄₀]` component removed.
    pub fn normalize(self) -> Self {
        let n = self.q0.norm();
        let q0 = self.q0.scale(1.0 / n);
        let q1 = self.q1.scale(1.0 / n);
        DualQuaternion::new(q0, q1 - q0.scale(q1.dot(q0)))
    }

    pub fn rotation(self) -> Quaternion {
        self.q0
    }

    /// Translation part `2q₁q̄₀`.
    pub fn translation(self) -> Vec3 {
        (self.q1 * self.q0.conj()).scale(2.0).vector()
    }

    /// Inverse motion; equals the conjugate for unit elements.
    pub fn inverse(self) -> Self {
        self.conj()
    }

    /// Rigid motion of a point, `q₀xq̄₀ + 2q₁q̄₀`, computed as the sandwich
    /// of `1 + εx` between `q̌` and `q̄₀ − εq̄₁`. (With the plain conjugate
    /// `q̄₀ + εq̄₁` the translation cancels for points.)
    pub fn act(self, x: Vec3) -> Result<Vec3, AlgebraError> {
        let defect = self.unit_defect();
        if defect > TOL_UNIT {
            return Err(AlgebraError::NotUnit(defect));
        }
        let p = DualQuaternion::new(Quaternion::IDENTITY, Quaternion::pure(x));
        let point_conj = DualQuaternion::new(self.q0.conj(), -self.q1.conj());
        Ok((self * p * point_conj).q1.vector())
    }

    /// The same motion as [`act`](Self::act) by the closed form
    /// `q₀xq̄₀ + 2q₁q̄₀`, without the unit check.
    pub fn transform_point(self, x: Vec3) -> Vec3 {
        self.q0.rotate(x) + self.translation()
    }

    /// Motion of an oriented line: `v₀ ↦ Rv₀`, `v₁ ↦ Rv₁ + T×Rv₀`.
    pub fn transform_line(self, v: DualVector) -> DualVector {
        let d = self.q0.rotate(v.v0);
        DualVector::new(d, self.q0.rotate(v.v1) + self.translation().cross(d))
    }

    /// Motion of a line by the sandwich `q̌ v̌ q̌*`, with `v̌` embedded as a
    /// pure dual quaternion.
    pub fn sandwich_line(self, v: DualVector) -> DualVector {
        let p = DualQuaternion::new(Quaternion::pure(v.v0), Quaternion::pure(v.v1));
        let r = self * p * self.conj();
        DualVector::new(r.q0.vector(), r.q1.vector())
    }
}

impl Mul for DualQuaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        DualQuaternion::new(self.q0 * o.q0, self.q0 * o.q1 + self.q1 * o.q0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn near(a: Vec3, b: Vec3) -> bool {
        (a - b).max_abs() < 1e-14
    }

    #[test]
    fn identity_motion() {
        let x = Vec3::new(1.0, -2.0, 0.5);
        assert_eq!(DualQuaternion::IDENTITY.act(x), Ok(x));
    }

    #[test]
    fn pure_translation() {
        let t = Vec3::new(0.5, 3.0, -1.0);
        let q = DualQuaternion::new(Quaternion::IDENTITY, Quaternion::pure(t).scale(0.5));
        assert!(near(q.act(Vec3::new(1.0, 1.0, 1.0)).unwrap(), Vec3::new(1.5, 4.0, 0.0)));
    }

    #[test]
    fn half_turn_about_k() {
        let q = DualQuaternion::new(Quaternion::from_axis_angle(Vec3::Z, core::f64::consts::PI), Quaternion::ZERO);
        assert!(near(q.act(Vec3::X).unwrap(), Vec3::new(-1.0, 0.0, 0.0)));
    }

    #[test]
    fn non_unit_is_rejected() {
        let q = DualQuaternion::new(Quaternion::new(2.0, 0.0, 0.0, 0.0), Quaternion::ZERO);
        assert!(matches!(q.act(Vec3::X), Err(AlgebraError::NotUnit(_))));
    }

    #[test]
    fn normalize_produces_unit() {
        let q = DualQuaternion::new(Quaternion::new(1.0, 2.0, -0.5, 0.3), Quaternion::new(0.4, 0.1, 1.0, -2.0));
        let n = q.normalize();
        assert!(n.unit_defect() < 1e-15);
    }

    #[test]
    fn matrix_roundtrip() {
        let q = Quaternion::from_axis_angle(Vec3::new(1.0, -2.0, 0.5), 2.9);
        let back = Quaternion::from_matrix(q.to_matrix());
        assert!((back.dot(q).abs() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn line_motion_matches_sandwich() {
        let g = DualQuaternion::from_rotation_translation(
            Quaternion::from_axis_angle(Vec3::new(0.3, 1.0, -0.2), 1.1),
            Vec3::new(2.0, -1.0, 0.25),
        );
        let l = DualVector::new(Vec3::new(0.0, 0.6, 0.8), Vec3::new(1.0, 0.8, -0.6));
        let a = g.transform_line(l);
        let b = g.sandwich_line(l);
        assert!(near(a.v0, b.v0) && near(a.v1, b.v1));
    }

    #[test]
    fn closed_form_matches_sandwich() {
        let g = DualQuaternion::from_rotation_translation(
            Quaternion::from_axis_angle(Vec3::new(-1.0, 0.2, 0.7), -2.3),
            Vec3::new(0.1, 5.0, -3.0),
        );
        let x = Vec3::new(0.7, -0.1, 2.0);
        assert!(near(g.act(x).unwrap(), g.transform_point(x)));
    }
}
