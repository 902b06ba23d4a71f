//! Curves of unit dual vectors: the representation of a ruled surface.
//!
//! A [`RuledCurve`] answers one question: the Taylor series of `v̌` about a
//! parameter value, to a requested order. Everything else (frames,
//! invariants, striction, singularities) is computed from those series.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::algebra::{DualQuaternion, DualVector, UnitDualVector, Vec3};
use crate::error::GeometryError;
use crate::numeric::{self, MonotoneCubic};
use crate::polynomial::Polynomial;
use crate::series::Series;
use crate::tolerance::CYL_FLOOR;

/// Default highest derivative order supplied by analytic curves.
pub const DEFAULT_MAX_ORDER: usize = 16;

/// Highest derivative order supplied by finite differences.
pub const NUMERIC_MAX_ORDER: usize = 8;

/// A closed parameter interval.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Interval {
    pub start: f64,
    pub end: f64,
}

impl Interval {
    pub const fn new(start: f64, end: f64) -> Self {
        Interval { start, end }
    }

    pub fn length(&self) -> f64 {
        self.end - self.start
    }

    pub fn contains(&self, s: f64) -> bool {
        s >= self.start && s <= self.end
    }

    /// `n ≥ 2` equally spaced points including both ends.
    pub fn linspace(&self, n: usize) -> impl Iterator<Item = f64> + '_ {
        let n = n.max(2);
        (0..n).map(move |i| {
            if i == n - 1 {
                self.end
            } else {
                self.start + self.length() * i as f64 / (n - 1) as f64
            }
        })
    }
}

/// Where a curve's derivatives come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DerivativeSource {
    Analytic,
    Numeric,
}

/// A smooth curve `s ↦ v̌(s)` of unit dual vectors with Taylor jets.
///
/// Implementations must be pure in `s`.
pub trait RuledCurve {
    /// Parameter interval.
    fn domain(&self) -> Interval;

    /// Highest derivative order available from [`taylor`](Self::taylor).
    fn max_order(&self) -> usize {
        DEFAULT_MAX_ORDER
    }

    fn derivative_source(&self) -> DerivativeSource {
        DerivativeSource::Analytic
    }

    /// Taylor series of `v̌` about `s`, known through `order`. The series is
    /// a unit dual vector to every known order.
    fn taylor(&self, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError>;

    /// The ruling at `s`.
    fn line(&self, s: f64) -> Result<UnitDualVector, GeometryError> {
        Ok(UnitDualVector::new_unchecked(self.taylor(s, 0)?.value()))
    }

    /// Derivatives `v̌(s), v̌'(s), …, v̌⁽ᵏ⁾(s)`.
    fn jet(&self, s: f64, order: usize) -> Result<Vec<DualVector>, GeometryError> {
        let t = self.taylor(s, order)?;
        Ok((0..=order).map(|k| t.derivative_at(k)).collect())
    }

    /// Surface point `F(s,t) = r(s) + t·e(s)`, with `r = v₀×v₁`, `e = v₀`.
    fn point(&self, s: f64, t: f64) -> Result<Vec3, GeometryError> {
        Ok(self.line(s)?.point_at(t))
    }
}

impl<C: RuledCurve + ?Sized> RuledCurve for &C {
    fn domain(&self) -> Interval {
        (**self).domain()
    }
    fn max_order(&self) -> usize {
        (**self).max_order()
    }
    fn derivative_source(&self) -> DerivativeSource {
        (**self).derivative_source()
    }
    fn taylor(&self, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError> {
        (**self).taylor(s, order)
    }
}

impl<C: RuledCurve + ?Sized> RuledCurve for Box<C> {
    fn domain(&self) -> Interval {
        (**self).domain()
    }
    fn max_order(&self) -> usize {
        (**self).max_order()
    }
    fn derivative_source(&self) -> DerivativeSource {
        (**self).derivative_source()
    }
    fn taylor(&self, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError> {
        (**self).taylor(s, order)
    }
}

pub(crate) fn check_order(requested: usize, available: usize) -> Result<(), GeometryError> {
    if requested > available {
        Err(GeometryError::OrderUnavailable { requested, available })
    } else {
        Ok(())
    }
}

/// The line series `e + ε r×e` of a base curve `r` and director `e`.
pub fn line_series(r: Vec3<Series>, e: Vec3<Series>) -> DualVector<Series> {
    DualVector::new(e, r.cross(e))
}

/// Re-expands a unit dual vector series in the arclength of `v₀`, measured
/// from the base point. Returns the new series and the old parameter offset
/// as a series in the arclength offset.
pub fn local_arclength(v: &DualVector<Series>, s: f64) -> Result<(DualVector<Series>, Series), GeometryError> {
    let speed = v.v0.derivative().norm();
    if !(speed.value() > CYL_FLOOR) {
        return Err(GeometryError::CylindricalPoint { s, speed: speed.value() });
    }
    let u_of_s = speed.integral().revert();
    Ok((v.compose(&u_of_s), u_of_s))
}

/// A curve given by a generator evaluated on series arguments.
///
/// The generator receives `s + δ` as a [`Series`] and returns `v̌` (any
/// nonzero multiple is accepted; the result is normalized).
#[derive(Clone)]
pub struct AnalyticCurve<F> {
    domain: Interval,
    generator: F,
}

impl<F: Fn(Series) -> DualVector<Series>> AnalyticCurve<F> {
    pub fn new(domain: Interval, generator: F) -> Self {
        AnalyticCurve { domain, generator }
    }
}

impl<F: Fn(Series) -> DualVector<Series>> RuledCurve for AnalyticCurve<F> {
    fn domain(&self) -> Interval {
        self.domain
    }

    fn taylor(&self, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError> {
        check_order(order, DEFAULT_MAX_ORDER)?;
        Ok((self.generator)(Series::variable(s, order)).normalized())
    }
}

/// Closed-form surfaces.
pub mod builtin {
    use super::*;

    /// Helicoid `r = (0, 0, p·s)`, `e = (cos s, sin s, 0)`.
    pub fn helicoid(pitch: f64, domain: Interval) -> AnalyticCurve<impl Fn(Series) -> DualVector<Series> + Clone> {
        AnalyticCurve::new(domain, move |s: Series| {
            let (sn, cs) = s.sin_cos();
            let z = Series::constant(0.0);
            line_series(Vec3::new(z, z, s * pitch), Vec3::new(cs, sn, z))
        })
    }

    /// Tangent developable of the circular helix
    /// `γ(u) = (a cos u/c, a sin u/c, h u/c)`, `c = √(a² + h²)`, with `u` the
    /// helix arclength.
    pub fn helix_tangent_developable(
        radius: f64,
        pitch: f64,
        domain: Interval,
    ) -> AnalyticCurve<impl Fn(Series) -> DualVector<Series> + Clone> {
        let c = libm::sqrt(radius * radius + pitch * pitch);
        AnalyticCurve::new(domain, move |u: Series| {
            let (sn, cs) = (u * (1.0 / c)).sin_cos();
            let point = Vec3::new(cs * radius, sn * radius, u * (pitch / c));
            let tangent = Vec3::new(sn * (-radius / c), cs * (radius / c), Series::constant(pitch / c));
            line_series(point, tangent)
        })
    }

    /// Circular cone with apex `apex`, axis `+z` and half-angle `alpha`.
    pub fn cone(apex: Vec3, alpha: f64, domain: Interval) -> AnalyticCurve<impl Fn(Series) -> DualVector<Series> + Clone> {
        let (sa, ca) = libm::sincos(alpha);
        AnalyticCurve::new(domain, move |s: Series| {
            let (sn, cs) = s.sin_cos();
            let e = Vec3::new(cs * sa, sn * sa, Series::constant(ca));
            line_series(apex.to_series(), e)
        })
    }
}

/// How the two polynomial triples of a [`PolynomialCurve`] are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolynomialForm {
    /// Base curve `r(s)` and director `e(s)`.
    BaseDirector,
    /// Direction `v₀(s)` and moment `v₁(s)` of the line.
    Lines,
}

/// A ruled surface with polynomial data, normalized to unit dual vectors on
/// evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialCurve {
    domain: Interval,
    a: [Polynomial; 3],
    b: [Polynomial; 3],
    form: PolynomialForm,
}

impl PolynomialCurve {
    /// `F(s,t) = r(s) + t·e(s)`; `e` need not be unit or orthogonal to `r`.
    pub fn from_base_director(domain: Interval, r: [Polynomial; 3], e: [Polynomial; 3]) -> Self {
        PolynomialCurve { domain, a: r, b: e, form: PolynomialForm::BaseDirector }
    }

    /// Polynomial dual vector `v₀ + εv₁`, renormalized to unit on evaluation.
    pub fn from_lines(domain: Interval, v0: [Polynomial; 3], v1: [Polynomial; 3]) -> Self {
        PolynomialCurve { domain, a: v0, b: v1, form: PolynomialForm::Lines }
    }

    pub fn form(&self) -> PolynomialForm {
        self.form
    }

    pub fn polynomials(&self) -> (&[Polynomial; 3], &[Polynomial; 3]) {
        (&self.a, &self.b)
    }

    pub fn with_domain(mut self, domain: Interval) -> Self {
        self.domain = domain;
        self
    }
}

fn poly_vec(p: &[Polynomial; 3], s: f64, order: usize) -> Vec3<Series> {
    Vec3::new(p[0].taylor(s, order), p[1].taylor(s, order), p[2].taylor(s, order))
}

impl RuledCurve for PolynomialCurve {
    fn domain(&self) -> Interval {
        self.domain
    }

    fn taylor(&self, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError> {
        check_order(order, DEFAULT_MAX_ORDER)?;
        let a = poly_vec(&self.a, s, order);
        let b = poly_vec(&self.b, s, order);
        let v = match self.form {
            PolynomialForm::BaseDirector => line_series(a, b),
            PolynomialForm::Lines => DualVector::new(a, b),
        };
        if v.v0.value().norm() == 0.0 {
            return Err(GeometryError::DegenerateDirector { s });
        }
        Ok(v.normalized())
    }
}

/// A curve known only through point evaluations; derivatives come from
/// central finite differences with Richardson extrapolation.
#[derive(Clone)]
pub struct NumericCurve<F> {
    domain: Interval,
    f: F,
}

/// Accuracy order of the central stencils.
const STENCIL_ORDER: usize = 8;

impl<F: Fn(f64) -> DualVector> NumericCurve<F> {
    /// `f` must be defined slightly beyond the domain ends (stencils are
    /// centered).
    pub fn new(domain: Interval, f: F) -> Self {
        NumericCurve { domain, f }
    }

    fn derivative(&self, s: f64, k: usize, h: f64) -> DualVector {
        let half = (2 * ((k + 1) / 2) - 1 + STENCIL_ORDER) / 2;
        let xs: Vec<f64> = (0..=2 * half).map(|i| (i as f64 - half as f64) * h).collect();
        let w = numeric::fornberg_weights(0.0, &xs, k);
        let mut acc = DualVector::zero();
        for (x, c) in xs.iter().zip(&w[k]) {
            let v = (self.f)(s + x);
            acc = acc + DualVector::new(v.v0 * *c, v.v1 * *c);
        }
        acc
    }
}

impl<F: Fn(f64) -> DualVector> RuledCurve for NumericCurve<F> {
    fn domain(&self) -> Interval {
        self.domain
    }

    fn max_order(&self) -> usize {
        NUMERIC_MAX_ORDER
    }

    fn derivative_source(&self) -> DerivativeSource {
        DerivativeSource::Numeric
    }

    fn taylor(&self, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError> {
        check_order(order, NUMERIC_MAX_ORDER)?;
        let mut v0 = [Series::zeros(order + 1); 3];
        let mut v1 = [Series::zeros(order + 1); 3];
        let scale = self.domain.length().abs().max(f64::MIN_POSITIVE);
        let richardson = (1u64 << STENCIL_ORDER) as f64;
        let mut fact = 1.0;
        for k in 0..=order {
            if k > 0 {
                fact *= k as f64;
            }
            let d = if k == 0 {
                (self.f)(s)
            } else {
                let h = libm::pow(f64::EPSILON, 1.0 / (k + 2) as f64) * scale;
                let coarse = self.derivative(s, k, h);
                let fine = self.derivative(s, k, 0.5 * h);
                let c = 1.0 / (richardson - 1.0);
                DualVector::new(
                    fine.v0 * (richardson * c) - coarse.v0 * c,
                    fine.v1 * (richardson * c) - coarse.v1 * c,
                )
            };
            for (i, (x0, x1)) in [(d.v0.x, d.v1.x), (d.v0.y, d.v1.y), (d.v0.z, d.v1.z)].into_iter().enumerate() {
                v0[i].set_coeff(k, x0 / fact);
                v1[i].set_coeff(k, x1 / fact);
            }
        }
        let v = DualVector::new(Vec3::new(v0[0], v0[1], v0[2]), Vec3::new(v1[0], v1[1], v1[2]));
        Ok(v.normalized())
    }
}

/// A curve moved by a rigid motion.
#[derive(Clone, Debug)]
pub struct Moved<C> {
    pub inner: C,
    pub motion: DualQuaternion,
}

impl<C: RuledCurve> Moved<C> {
    pub fn new(inner: C, motion: DualQuaternion) -> Self {
        Moved { inner, motion }
    }
}

/// Applies a rigid motion coefficientwise to a line series (the action on
/// lines is linear in `(v₀, v₁)`).
pub fn move_series(motion: &DualQuaternion, v: &DualVector<Series>) -> DualVector<Series> {
    let n = v.len();
    let mut v0 = [Series::zeros(n); 3];
    let mut v1 = [Series::zeros(n); 3];
    let rot = motion.q0.to_matrix();
    let t = motion.translation();
    for k in 0..n {
        let c = v.coeff(k);
        let d = mat_vec(&rot, c.v0);
        let m = mat_vec(&rot, c.v1) + t.cross(d);
        for (i, (x, y)) in d.to_array().into_iter().zip(m.to_array()).enumerate() {
            v0[i].set_coeff(k, x);
            v1[i].set_coeff(k, y);
        }
    }
    DualVector::new(Vec3::new(v0[0], v0[1], v0[2]), Vec3::new(v1[0], v1[1], v1[2]))
}

pub(crate) fn mat_vec(m: &[[f64; 3]; 3], v: Vec3) -> Vec3 {
    Vec3::new(
        m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
        m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
        m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
    )
}

impl<C: RuledCurve> RuledCurve for Moved<C> {
    fn domain(&self) -> Interval {
        self.inner.domain()
    }
    fn max_order(&self) -> usize {
        self.inner.max_order()
    }
    fn derivative_source(&self) -> DerivativeSource {
        self.inner.derivative_source()
    }
    fn taylor(&self, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError> {
        Ok(move_series(&self.motion, &self.inner.taylor(s, order)?))
    }
}

/// Number of nodes in the arclength table.
const ARCLENGTH_NODES: usize = 512;

/// A curve reparameterized by the arclength `s̄` of `v₀`, with `s̄ = 0` at
/// the start of the original domain.
#[derive(Clone, Debug)]
pub struct ArclengthCurve<C> {
    inner: C,
    nodes_u: Vec<f64>,
    nodes_s: Vec<f64>,
    inverse: MonotoneCubic,
}

fn speed_at<C: RuledCurve>(c: &C, u: f64) -> Result<f64, GeometryError> {
    let t = c.taylor(u, 1)?;
    Ok(t.v0.coeff(1).norm())
}

impl<C: RuledCurve> ArclengthCurve<C> {
    /// Tabulates `s̄(u) = ∫|v₀'|` by adaptive quadrature on 512 nodes.
    pub fn new(inner: C) -> Result<Self, GeometryError> {
        let dom = inner.domain();
        let nodes_u: Vec<f64> = dom.linspace(ARCLENGTH_NODES).collect();
        let mut nodes_s = Vec::with_capacity(ARCLENGTH_NODES);
        nodes_s.push(0.0);
        let mut failure = None;
        for w in nodes_u.windows(2) {
            let piece = numeric::integrate(
                |u| match speed_at(&inner, u) {
                    Ok(v) if v > CYL_FLOOR => v,
                    Ok(v) => {
                        failure.get_or_insert(GeometryError::CylindricalPoint { s: u, speed: v });
                        0.0
                    }
                    Err(e) => {
                        failure.get_or_insert(e);
                        0.0
                    }
                },
                w[0],
                w[1],
                1e-14 * (w[1] - w[0]),
            );
            if let Some(e) = failure {
                return Err(e);
            }
            let last = *nodes_s.last().unwrap_or(&0.0);
            nodes_s.push(last + piece);
        }
        for &u in &nodes_u {
            let v = speed_at(&inner, u)?;
            if !(v > CYL_FLOOR) {
                return Err(GeometryError::CylindricalPoint { s: u, speed: v });
            }
        }
        let inverse = MonotoneCubic::new(nodes_s.clone(), nodes_u.clone());
        Ok(ArclengthCurve { inner, nodes_u, nodes_s, inverse })
    }

    /// Total arclength of `v₀`.
    pub fn total_length(&self) -> f64 {
        *self.nodes_s.last().unwrap_or(&0.0)
    }

    pub fn inner(&self) -> &C {
        &self.inner
    }

    /// `s̄(u)`.
    pub fn arclength_at(&self, u: f64) -> Result<f64, GeometryError> {
        let n = self.nodes_u.len();
        let i = match self.nodes_u.binary_search_by(|p| p.total_cmp(&u)) {
            Ok(i) => i,
            Err(i) => i.clamp(1, n) - 1,
        };
        let mut err = None;
        let piece = numeric::integrate(
            |x| {
                speed_at(&self.inner, x).unwrap_or_else(|e| {
                    err.get_or_insert(e);
                    0.0
                })
            },
            self.nodes_u[i],
            u,
            1e-15 * (1.0 + (u - self.nodes_u[i]).abs()),
        );
        match err {
            Some(e) => Err(e),
            None => Ok(self.nodes_s[i] + piece),
        }
    }

    /// `u(s̄)`: monotone cubic guess refined by safeguarded Newton steps.
    pub fn parameter_at(&self, sbar: f64) -> Result<f64, GeometryError> {
        let dom = self.inner.domain();
        let mut u = self.inverse.eval(sbar).clamp(dom.start, dom.end);
        for _ in 0..8 {
            let f = self.arclength_at(u)? - sbar;
            if f.abs() <= 1e-15 * (1.0 + sbar.abs()) {
                break;
            }
            let d = speed_at(&self.inner, u)?;
            u = (u - f / d).clamp(dom.start, dom.end);
        }
        Ok(u)
    }
}

impl<C: RuledCurve> RuledCurve for ArclengthCurve<C> {
    fn domain(&self) -> Interval {
        Interval::new(0.0, self.total_length())
    }

    fn max_order(&self) -> usize {
        self.inner.max_order()
    }

    fn derivative_source(&self) -> DerivativeSource {
        self.inner.derivative_source()
    }

    fn taylor(&self, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError> {
        let u = self.parameter_at(s)?;
        let raw = self.inner.taylor(u, order.max(1))?;
        let (v, _) = local_arclength(&raw, u)?;
        Ok(v.truncate(order + 1))
    }
}
