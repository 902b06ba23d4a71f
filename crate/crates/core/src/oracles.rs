//! Independent numerical cross-checks. Each function here recomputes a
//! quantity from sampled surface points or lines only, without the
//! invariant machinery it is meant to check.

use alloc::vec::Vec;

use crate::algebra::Vec3;
use crate::curve::RuledCurve;
use crate::error::GeometryError;
use crate::geometry::{frenet_at, striction_at};

/// Least-squares solution of the overdetermined system `A x = b` by
/// Householder QR. `a` is row-major with `b.len()` rows.
pub fn least_squares(a: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
    let (m, n) = (a.len(), a[0].len());
    let mut r: Vec<Vec<f64>> = a.to_vec();
    let mut y = b.to_vec();
    for k in 0..n {
        let norm = libm::sqrt((k..m).map(|i| r[i][k] * r[i][k]).sum::<f64>());
        if norm == 0.0 {
            continue;
        }
        let alpha = if r[k][k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..m).map(|i| r[i][k]).collect();
        v[0] -= alpha;
        let vv: f64 = v.iter().map(|x| x * x).sum();
        if vv == 0.0 {
            continue;
        }
        for j in k..n {
            let d: f64 = (k..m).map(|i| v[i - k] * r[i][j]).sum::<f64>() * 2.0 / vv;
            for i in k..m {
                r[i][j] -= d * v[i - k];
            }
        }
        let d: f64 = (k..m).map(|i| v[i - k] * y[i]).sum::<f64>() * 2.0 / vv;
        for i in k..m {
            y[i] -= d * v[i - k];
        }
    }
    let mut x = alloc::vec![0.0; n];
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|j| r[k][j] * x[j]).sum();
        x[k] = if r[k][k] != 0.0 { (y[k] - s) / r[k][k] } else { 0.0 };
    }
    x
}

/// Chebyshev nodes on `[-h, h]`.
pub fn chebyshev_nodes(h: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| h * libm::cos(core::f64::consts::PI * (i as f64 + 0.5) / n as f64))
        .collect()
}

/// Monomial coefficients `c_k` (in the unscaled variable) of the
/// least-squares polynomial of degree `degree` through `(xs, ys)`, fitted
/// in `x / h` for conditioning.
pub fn polyfit(xs: &[f64], ys: &[f64], degree: usize, h: f64) -> Vec<f64> {
    let a: Vec<Vec<f64>> = xs
        .iter()
        .map(|&x| {
            let u = x / h;
            let mut row = Vec::with_capacity(degree + 1);
            let mut p = 1.0;
            for _ in 0..=degree {
                row.push(p);
                p *= u;
            }
            row
        })
        .collect();
    let c = least_squares(&a, ys);
    c.iter().enumerate().map(|(k, ck)| ck / libm::pow(h, k as f64)).collect()
}

/// Leading exponents of the striction curve `σ(s) − σ(s0)` in the frame
/// `{v₀(s0), n₀(s0), t₀(s0)}`, read from a least-squares polynomial fit of
/// sampled striction points on `[s0 − h, s0 + h]`. Coefficients below
/// `rel_tol` times the largest fitted coefficient of a component (scaled
/// to the fitting window) are treated as zero.
pub fn striction_type_fit(
    c: &impl RuledCurve,
    s0: f64,
    h: f64,
    degree: usize,
    rel_tol: f64,
) -> Result<[Option<usize>; 3], GeometryError> {
    let (frame, _, _) = frenet_at(c, s0)?;
    let axes = [frame.v.direction(), frame.n.direction(), frame.t.direction()];
    let base = striction_at(c, s0)?.point;
    let xs = chebyshev_nodes(h, 3 * degree + 8);
    let mut comps: [Vec<f64>; 3] = Default::default();
    for &x in &xs {
        let p = striction_at(c, s0 + x)?.point - base;
        for (comp, axis) in comps.iter_mut().zip(&axes) {
            comp.push(p.dot(*axis));
        }
    }
    let mut out = [None; 3];
    for (o, ys) in out.iter_mut().zip(&comps) {
        let coeffs = polyfit(&xs, ys, degree, h);
        let scaled: Vec<f64> = coeffs.iter().enumerate().map(|(k, c)| (c * libm::pow(h, k as f64)).abs()).collect();
        let big = scaled.iter().fold(0.0f64, |m, x| m.max(*x));
        *o = scaled.iter().skip(1).position(|x| *x > rel_tol * big).map(|k| k + 1);
    }
    Ok(out)
}

/// Taylor coefficients `(r_k, e_k)`, `k ≤ degree`, of the foot point
/// `v₀×v₁` and direction `v₀` of the rulings near `s0`, fitted by least
/// squares to sampled lines. The parameter of `c` is used as is, so pass an
/// arclength-parameterized curve for arclength coefficients.
pub fn fit_line_taylor(
    c: &impl RuledCurve,
    s0: f64,
    h: f64,
    degree: usize,
) -> Result<(Vec<Vec3>, Vec<Vec3>), GeometryError> {
    let xs = chebyshev_nodes(h, 4 * degree + 8);
    let mut r: [Vec<f64>; 3] = Default::default();
    let mut e: [Vec<f64>; 3] = Default::default();
    for &x in &xs {
        let l = c.line(s0 + x)?.dual_vector();
        let foot = l.v0.cross(l.v1).to_array();
        let dir = l.v0.to_array();
        for i in 0..3 {
            r[i].push(foot[i]);
            e[i].push(dir[i]);
        }
    }
    let fit = |comps: &[Vec<f64>; 3]| {
        let c: Vec<Vec<f64>> = comps.iter().map(|ys| polyfit(&xs, ys, degree, h)).collect();
        (0..=degree).map(|k| Vec3::new(c[0][k], c[1][k], c[2][k])).collect::<Vec<_>>()
    };
    Ok((fit(&r), fit(&e)))
}

/// Singular values `(σ_min, σ_max)` of the Jacobian `[F_s, F_t]` of
/// `F(s,t) = point(s, t)`, by fourth-order central differences with step
/// `h` in `s`. `F` is affine in `t`, so the `t` difference is exact.
pub fn jacobian_singular_values(c: &impl RuledCurve, s: f64, t: f64, h: f64) -> Result<(f64, f64), GeometryError> {
    let p = |s: f64, t: f64| c.point(s, t);
    let fs = (p(s - 2.0 * h, t)? - p(s + 2.0 * h, t)? + (p(s + h, t)? - p(s - h, t)?) * 8.0) * (1.0 / (12.0 * h));
    let ft = p(s, t + 0.5)? - p(s, t - 0.5)?;
    let (a, b, d) = (fs.dot(fs), fs.dot(ft), ft.dot(ft));
    let tr = a + d;
    let disc = libm::sqrt(((a - d) * (a - d) + 4.0 * b * b).max(0.0));
    let smax = libm::sqrt(0.5 * (tr + disc));
    let area = fs.cross(ft).norm();
    let smin = if smax > 0.0 { area / smax } else { 0.0 };
    Ok((smin, smax))
}
