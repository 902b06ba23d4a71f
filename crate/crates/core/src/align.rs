//! Least-squares rigid alignment of point sets (Horn's quaternion method).

use crate::algebra::{DualQuaternion, Quaternion, Vec3};
use crate::numeric::symmetric_eigen;

/// The rigid motion `x ↦ R x + T` best mapping one point set onto another.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidAlignment {
    pub rotation: Quaternion,
    pub translation: Vec3,
    /// Largest distance between a moved source point and its target.
    pub max_residual: f64,
    pub rms_residual: f64,
}

impl RigidAlignment {
    pub fn apply(&self, p: Vec3) -> Vec3 {
        self.rotation.rotate(p) + self.translation
    }

    pub fn motion(&self) -> DualQuaternion {
        DualQuaternion::from_rotation_translation(self.rotation, self.translation)
    }
}

fn centroid(p: &[Vec3]) -> Vec3 {
    let sum = p.iter().fold(Vec3::zero(), |a, b| a + *b);
    sum * (1.0 / p.len() as f64)
}

/// Aligns `source` onto `target` (paired by index). Returns `None` for
/// empty or unequal-length inputs.
pub fn align_points(source: &[Vec3], target: &[Vec3]) -> Option<RigidAlignment> {
    if source.is_empty() || source.len() != target.len() {
        return None;
    }
    let (cs, ct) = (centroid(source), centroid(target));
    let mut m = [[0.0; 3]; 3];
    for (a, b) in source.iter().zip(target) {
        let a = (*a - cs).to_array();
        let b = (*b - ct).to_array();
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += a[i] * b[j];
            }
        }
    }
    let [[sxx, sxy, sxz], [syx, syy, syz], [szx, szy, szz]] = m;
    let n = [
        [sxx + syy + szz, syz - szy, szx - sxz, sxy - syx],
        [syz - szy, sxx - syy - szz, sxy + syx, szx + sxz],
        [szx - sxz, sxy + syx, -sxx + syy - szz, syz + szy],
        [sxy - syx, szx + sxz, syz + szy, -sxx - syy + szz],
    ];
    let (w, v) = symmetric_eigen(n);
    let k = (0..4).max_by(|&i, &j| w[i].total_cmp(&w[j])).unwrap_or(0);
    let q = Quaternion::new(v[0][k], v[1][k], v[2][k], v[3][k]);
    let rotation = q.scale(1.0 / q.norm());
    let translation = ct - rotation.rotate(cs);
    let mut out = RigidAlignment { rotation, translation, max_residual: 0.0, rms_residual: 0.0 };
    let mut ss = 0.0;
    for (a, b) in source.iter().zip(target) {
        let d = (out.apply(*a) - *b).norm();
        out.max_residual = out.max_residual.max(d);
        ss += d * d;
    }
    out.rms_residual = libm::sqrt(ss / source.len() as f64);
    Some(out)
}
