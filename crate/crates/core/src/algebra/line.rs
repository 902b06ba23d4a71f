use super::{AlgebraError, DualNumber, DualVector, Vec3};
use crate::tolerance::{tol_geo, TOL_UNIT};

/// A unit dual vector, i.e. the oriented line `{v₀×v₁ + t·v₀}`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct UnitDualVector(DualVector);

impl UnitDualVector {
    /// Wraps `v` after checking `|v₀| = 1` and `v₀·v₁ = 0` within tolerance.
    pub fn new(v: DualVector) -> Result<Self, AlgebraError> {
        let defect = v.unit_defect();
        if defect <= TOL_UNIT {
            Ok(UnitDualVector(v))
        } else {
            Err(AlgebraError::NotUnit(defect))
        }
    }

    /// Wraps `v` without checking.
    pub const fn new_unchecked(v: DualVector) -> Self {
        UnitDualVector(v)
    }

    /// Projects an arbitrary dual vector with `v₀ ≠ 0` onto the unit ones.
    pub fn normalize(v: DualVector) -> Result<Self, AlgebraError> {
        if v.v0.norm() == 0.0 {
            return Err(AlgebraError::ZeroDirection);
        }
        Ok(UnitDualVector(v.normalized()))
    }

    /// The line through `a` with direction `d` (normalized if needed).
    pub fn through(a: Vec3, d: Vec3) -> Result<Self, AlgebraError> {
        let n = d.norm();
        if !(n > 0.0) {
            return Err(AlgebraError::ZeroDirection);
        }
        let d = d.scale(1.0 / n);
        Ok(UnitDualVector(DualVector::new(d, a.cross(d))))
    }

    pub fn dual_vector(self) -> DualVector {
        self.0
    }

    pub fn direction(self) -> Vec3 {
        self.0.v0
    }

    pub fn moment(self) -> Vec3 {
        self.0.v1
    }

    /// Point of the line closest to the origin, `v₀×v₁`.
    pub fn foot(self) -> Vec3 {
        self.0.v0.cross(self.0.v1)
    }

    /// Point at signed distance `t` from the foot along the direction.
    pub fn point_at(self, t: f64) -> Vec3 {
        self.foot() + self.0.v0 * t
    }

    /// Whether `a` lies on the line: `a×v₀ = v₁` within `tol_geo(|a|)`.
    pub fn contains(self, a: Vec3) -> bool {
        (a.cross(self.0.v0) - self.0.v1).norm() <= tol_geo(a.norm())
    }

    /// Whether the two lines meet at a right angle: `ǔ·v̌ = 0`.
    pub fn meets_perpendicularly(self, other: UnitDualVector) -> bool {
        let d = self.dot(other);
        let scale = self.foot().norm().max(other.foot().norm());
        d.real.abs() <= tol_geo(scale) && d.dual.abs() <= tol_geo(scale)
    }

    pub fn dot(self, other: UnitDualVector) -> DualNumber {
        self.0.dot(other.0)
    }

    pub fn reversed(self) -> Self {
        UnitDualVector(-self.0)
    }
}

impl From<UnitDualVector> for DualVector {
    fn from(u: UnitDualVector) -> DualVector {
        u.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_axis() -> UnitDualVector {
        UnitDualVector::through(Vec3::zero(), Vec3::X).unwrap()
    }

    #[test]
    fn line_from_point_and_direction() {
        assert_eq!(x_axis().dual_vector(), DualVector::new(Vec3::X, Vec3::zero()));
        let l = UnitDualVector::through(Vec3::Y, Vec3::X).unwrap();
        assert_eq!(l.dual_vector(), DualVector::new(Vec3::X, Vec3::new(0.0, 0.0, -1.0)));
        let l = UnitDualVector::through(Vec3::X, Vec3::X).unwrap();
        assert_eq!(l.dual_vector(), DualVector::new(Vec3::X, Vec3::zero()));
        assert_eq!(UnitDualVector::through(Vec3::X, Vec3::zero()), Err(AlgebraError::ZeroDirection));
    }

    #[test]
    fn point_on_line_examples() {
        let l = x_axis();
        assert!(l.contains(Vec3::zero()));
        assert!(!l.contains(Vec3::Y));
        for t in [-1e3, -2.0, 0.5, 7.0, 1e6] {
            assert!(l.contains(Vec3::new(t, 0.0, 0.0)));
        }
    }

    #[test]
    fn perpendicular_meeting_examples() {
        let x = x_axis();
        let y = UnitDualVector::through(Vec3::zero(), Vec3::Y).unwrap();
        assert!(x.meets_perpendicularly(y));
        assert!(!x.meets_perpendicularly(x));
        let skew = UnitDualVector::through(Vec3::Z, Vec3::Y).unwrap();
        assert!(!x.meets_perpendicularly(skew));
    }

    #[test]
    fn foot_lies_on_line() {
        let l = UnitDualVector::through(Vec3::new(1.0, 2.0, 3.0), Vec3::new(0.0, 1.0, 1.0)).unwrap();
        assert!(l.contains(l.foot()));
        assert!(l.contains(l.point_at(-4.5)));
        assert!(l.foot().dot(l.direction()).abs() < 1e-15);
    }
}
