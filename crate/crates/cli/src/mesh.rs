//! Triangulated grids of `F(s,t)` and OBJ output.

use std::fmt::Write as _;

use ruledkit_core::geometry::FrontalData;
use ruledkit_core::{RuledCurve, Vec3};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    /// Row-major: `s` index outer, `t` index inner.
    pub vertices: Vec<Vec3>,
    /// Zero-based vertex indices.
    pub faces: Vec<[usize; 3]>,
}

/// Samples `F` on an `ns × nt` grid over the domain and `t ∈ [t0, t1]`.
/// Each cell gives two triangles, counterclockwise seen from the side of
/// the normal: `F_s × F_t` on regular surfaces, the front normal `ν` on
/// developables.
pub fn build(c: &dyn RuledCurve, ns: usize, nt: usize, t_range: (f64, f64)) -> Result<Mesh, CliError> {
    if ns < 2 || nt < 2 {
        return Err(CliError::input(format!("grid needs at least 2x2 samples, got {ns}x{nt}")));
    }
    if !(t_range.0 < t_range.1) {
        return Err(CliError::input(format!("empty t-range {}:{}", t_range.0, t_range.1)));
    }
    let ss: Vec<f64> = c.domain().linspace(ns).collect();
    let ts: Vec<f64> = (0..nt).map(|j| t_range.0 + (t_range.1 - t_range.0) * j as f64 / (nt - 1) as f64).collect();
    let mut vertices = Vec::with_capacity(ns * nt);
    for &s in &ss {
        for &t in &ts {
            vertices.push(c.point(s, t)?);
        }
    }
    let frontal = FrontalData::new(c).ok();
    let idx = |i: usize, j: usize| i * nt + j;
    let mut faces = Vec::with_capacity(2 * (ns - 1) * (nt - 1));
    for i in 0..ns - 1 {
        let flip = match &frontal {
            Some(f) => Some(f.normal(0.5 * (ss[i] + ss[i + 1]))?),
            None => None,
        };
        for j in 0..nt - 1 {
            let (a, b, cc, d) = (idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1));
            let reverse = match flip {
                Some(nu) => {
                    let [pa, pb, pc, pd] = [a, b, cc, d].map(|k| vertices[k]);
                    let area = (pb - pa).cross(pc - pa) + (pc - pa).cross(pd - pa);
                    area.dot(nu) < 0.0
                }
                None => false,
            };
            if reverse {
                faces.push([a, cc, b]);
                faces.push([a, d, cc]);
            } else {
                faces.push([a, b, cc]);
                faces.push([a, cc, d]);
            }
        }
    }
    Ok(Mesh { vertices, faces })
}

impl Mesh {
    /// Wavefront OBJ text with 1-based indices.
    pub fn to_obj(&self) -> String {
        let mut out = String::with_capacity(48 * self.vertices.len() + 24 * self.faces.len());
        let _ = writeln!(out, "# ruledkit mesh: {} vertices, {} faces", self.vertices.len(), self.faces.len());
        for v in &self.vertices {
            let _ = writeln!(out, "v {:.16e} {:.16e} {:.16e}", v.x, v.y, v.z);
        }
        for f in &self.faces {
            let _ = writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ruledkit_core::curve::builtin;
    use ruledkit_core::Interval;

    #[test]
    fn grid_counts_and_orientation() {
        let c = builtin::helicoid(1.0, Interval::new(0.0, 1.0));
        let m = build(&c, 64, 16, (-1.0, 1.0)).unwrap();
        assert_eq!(m.vertices.len(), 1024);
        assert_eq!(m.faces.len(), 1890);
        // first triangle normal agrees with F_s × F_t at (0, -1)
        let [a, b, cc] = m.faces[0].map(|k| m.vertices[k]);
        let n = (b - a).cross(cc - a);
        let fs = Vec3::new(0.0, -1.0, 1.0);
        let ft = Vec3::new(1.0, 0.0, 0.0);
        assert!(n.dot(fs.cross(ft)) > 0.0);
        assert!(build(&c, 64, 1, (-1.0, 1.0)).is_err());
    }

    #[test]
    fn obj_has_one_line_per_element() {
        let c = builtin::helicoid(1.0, Interval::new(0.0, 1.0));
        let m = build(&c, 3, 2, (0.0, 1.0)).unwrap();
        let obj = m.to_obj();
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 6);
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 4);
    }
}
