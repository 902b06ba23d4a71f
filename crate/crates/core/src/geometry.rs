//! Dual Frenet frame, invariants, striction curve, singular locus, frontal
//! data and canonical jets of a ruled surface.
//!
//! All invariant derivatives are taken with respect to the arclength of
//! `v₀`, whatever the parameter of the input curve.

use alloc::vec::Vec;

use crate::algebra::{DualNumber, DualQuaternion, DualVector, Quaternion, UnitDualVector, Vec3};
use crate::curve::{check_order, local_arclength, move_series, RuledCurve};
use crate::error::GeometryError;
use crate::numeric;
use crate::series::Series;
use crate::tolerance::{jet_tol, CYL_FLOOR, DEV_TOL};

/// The dual Frenet frame `(v̌, ň, ť)` at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DualFrame {
    pub v: UnitDualVector,
    pub n: UnitDualVector,
    pub t: UnitDualVector,
}

impl DualFrame {
    /// The coordinate axes `i, j, k` as lines through the origin.
    pub const IDENTITY: DualFrame = DualFrame {
        v: UnitDualVector::new_unchecked(DualVector::new(Vec3::X, Vec3::new(0.0, 0.0, 0.0))),
        n: UnitDualVector::new_unchecked(DualVector::new(Vec3::Y, Vec3::new(0.0, 0.0, 0.0))),
        t: UnitDualVector::new_unchecked(DualVector::new(Vec3::Z, Vec3::new(0.0, 0.0, 0.0))),
    };

    pub fn from_rows(rows: [DualVector; 3]) -> Self {
        DualFrame {
            v: UnitDualVector::new_unchecked(rows[0]),
            n: UnitDualVector::new_unchecked(rows[1]),
            t: UnitDualVector::new_unchecked(rows[2]),
        }
    }

    /// Largest violation of dual orthonormality and `v̌×ň = ť`.
    pub fn defect(&self) -> f64 {
        let (v, n, t) = (self.v.dual_vector(), self.n.dual_vector(), self.t.dual_vector());
        let mut worst: f64 = 0.0;
        for (a, b, want) in [(v, v, 1.0), (n, n, 1.0), (t, t, 1.0), (v, n, 0.0), (n, t, 0.0), (t, v, 0.0)] {
            let d = a.dot(b);
            worst = worst.max((d.real - want).abs()).max(d.dual.abs());
        }
        let c = v.cross(n) - t;
        worst.max(c.v0.max_abs()).max(c.v1.max_abs())
    }

    /// The frame as the rows of a 3×3 dual matrix.
    pub fn rows(&self) -> [DualVector; 3] {
        [self.v.dual_vector(), self.n.dual_vector(), self.t.dual_vector()]
    }
}

/// Frame and invariants as Taylor series in local arclength.
#[derive(Clone, Copy, Debug)]
pub struct FrameSeries {
    pub v: DualVector<Series>,
    pub n: DualVector<Series>,
    pub t: DualVector<Series>,
    /// `κ̌`, known one order below `v̌`.
    pub kappa: DualNumber<Series>,
    /// `τ̌`, known two orders below `v̌`.
    pub tau: DualNumber<Series>,
}

impl FrameSeries {
    /// Frenet definitions applied to an arclength series `v̌`:
    /// `κ̌ = |v̌'|`, `ň = v̌'/κ̌`, `ť = v̌×ň`, `τ̌ = ň'·ť`.
    pub fn new(v: &DualVector<Series>) -> Self {
        let dv = v.derivative();
        let kappa = dv.dot(dv).sqrt_unchecked();
        let n = dv.scale(kappa.recip());
        let t = v.cross(n);
        let tau = n.derivative().dot(t);
        FrameSeries { v: *v, n, t, kappa, tau }
    }

    pub fn frame(&self) -> DualFrame {
        DualFrame {
            v: UnitDualVector::new_unchecked(self.v.value()),
            n: UnitDualVector::new_unchecked(self.n.value()),
            t: UnitDualVector::new_unchecked(self.t.value()),
        }
    }
}

/// Local-arclength series of `v̌` about `s`, known through `order`.
pub fn arclength_series(c: &impl RuledCurve, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError> {
    let raw = c.taylor(s, order.max(1))?;
    Ok(local_arclength(&raw, s)?.0.truncate(order + 1))
}

/// Frame series about `s` with `v̌` known through `order`.
pub fn frame_series(c: &impl RuledCurve, s: f64, order: usize) -> Result<FrameSeries, GeometryError> {
    Ok(FrameSeries::new(&arclength_series(c, s, order)?))
}

/// Values and arclength derivatives of the invariants at one point.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InvariantJet {
    pub s: f64,
    pub kappa0: Vec<f64>,
    pub kappa1: Vec<f64>,
    pub tau0: Vec<f64>,
    pub tau1: Vec<f64>,
}

impl InvariantJet {
    /// A jet in arclength (`κ₀ ≡ 1`) from derivative lists; missing
    /// entries are padded with zeros to the longest list.
    pub fn from_derivatives(s: f64, kappa1: &[f64], tau0: &[f64], tau1: &[f64]) -> Self {
        let n = kappa1.len().max(tau0.len()).max(tau1.len()).max(1);
        let pad = |x: &[f64]| {
            let mut v = x.to_vec();
            v.resize(n, 0.0);
            v
        };
        let mut kappa0 = alloc::vec![0.0; n];
        kappa0[0] = 1.0;
        InvariantJet { s, kappa0, kappa1: pad(kappa1), tau0: pad(tau0), tau1: pad(tau1) }
    }

    /// Highest derivative order known for every invariant.
    pub fn order(&self) -> usize {
        self.kappa1.len().min(self.tau0.len()).min(self.tau1.len()).saturating_sub(1)
    }

    fn from_series(s: f64, k0: &Series, k1: &Series, t0: &Series, t1: &Series, order: usize) -> Self {
        let d = |x: &Series| (0..=order).map(|k| x.derivative_at(k)).collect::<Vec<_>>();
        InvariantJet { s, kappa0: d(k0), kappa1: d(k1), tau0: d(t0), tau1: d(t1) }
    }

    /// The first entry where the two jets differ by more than `jet_tol`.
    pub fn mismatch(&self, other: &InvariantJet) -> Option<(&'static str, usize, f64, f64)> {
        let pairs: [(&'static str, &Vec<f64>, &Vec<f64>); 3] =
            [("kappa1", &self.kappa1, &other.kappa1), ("tau0", &self.tau0, &other.tau0), ("tau1", &self.tau1, &other.tau1)];
        for (name, a, b) in pairs {
            for (k, (x, y)) in a.iter().zip(b.iter()).enumerate() {
                if (x - y).abs() > jet_tol(*y) {
                    return Some((name, k, *x, *y));
                }
            }
        }
        None
    }
}

/// The frame and the invariants (without derivatives) at `s`.
pub fn frenet_at(c: &impl RuledCurve, s: f64) -> Result<(DualFrame, DualNumber, DualNumber), GeometryError> {
    check_order(2, c.max_order())?;
    let f = frame_series(c, s, 2)?;
    Ok((f.frame(), f.kappa.value(), f.tau.value()))
}

/// Sup-norm residual of `v̌' = κ̌ň`, `ň' = −κ̌v̌ + τ̌ť`, `ť' = −τ̌ň` at `s`,
/// with derivatives taken from the curve's own jets.
pub fn frenet_residual(c: &impl RuledCurve, s: f64) -> Result<f64, GeometryError> {
    check_order(3, c.max_order())?;
    let f = frame_series(c, s, 3)?;
    let (k, t) = (f.kappa.value(), f.tau.value());
    let (v, n, b) = (f.v.coeff(0), f.n.coeff(0), f.t.coeff(0));
    let r1 = f.v.coeff(1) - n.scale(k);
    let r2 = f.n.coeff(1) - (b.scale(t) - v.scale(k));
    let r3 = f.t.coeff(1) + n.scale(t);
    Ok([r1, r2, r3].iter().fold(0.0, |m, r| m.max(r.v0.max_abs()).max(r.v1.max_abs())))
}

/// Invariant series `(κ₁, τ₀, τ₁)` by the determinant formulas
/// `κ₁ = det(e, e', r')`, `τ₀ = det(e, e', e'')`, `τ₁ = σ'·e`, for an
/// arclength series `v̌` (so `|e'| = 1`).
pub fn determinant_series(v: &DualVector<Series>) -> (Series, Series, Series) {
    let e = v.v0;
    let r = v.v0.cross(v.v1);
    let de = e.derivative();
    let dr = r.derivative();
    let kappa1 = e.dot(de.cross(dr));
    let tau0 = e.dot(de.cross(de.derivative()));
    let sigma = striction_series_of(v);
    let tau1 = sigma.derivative().dot(e);
    (kappa1, tau0, tau1)
}

/// Jets of the invariants at `s` through `order`, computed by the Frenet
/// definitions and checked against the determinant formulas.
pub fn invariant_jet(c: &impl RuledCurve, s: f64, order: usize) -> Result<InvariantJet, GeometryError> {
    let k = order + 2;
    check_order(k, c.max_order())?;
    let v = arclength_series(c, s, k)?;
    let f = FrameSeries::new(&v);
    let jet = InvariantJet::from_series(s, &f.kappa.real, &f.kappa.dual, &f.tau.real, &f.tau.dual, order);
    let (k1, t0, t1) = determinant_series(&v);
    let other = InvariantJet::from_series(s, &f.kappa.real, &k1, &t0, &t1, order);
    if let Some((name, k, a, b)) = jet.mismatch(&other) {
        return Err(GeometryError::JetMismatch { name, k, a, b });
    }
    Ok(jet)
}

/// Jets of the invariants by the determinant formulas alone.
pub fn invariant_jet_determinant(c: &impl RuledCurve, s: f64, order: usize) -> Result<InvariantJet, GeometryError> {
    let k = order + 2;
    check_order(k, c.max_order())?;
    let v = arclength_series(c, s, k)?;
    let (k1, t0, t1) = determinant_series(&v);
    let one = Series::constant(1.0);
    Ok(InvariantJet::from_series(s, &one, &k1, &t0, &t1, order))
}

/// `κ₁ = v₀'·v₁' / |v₀'|²` as a series in the curve's own parameter.
pub fn kappa1_series(c: &impl RuledCurve, u: f64, order: usize) -> Result<Series, GeometryError> {
    let raw = c.taylor(u, order + 1)?;
    let d0 = raw.v0.derivative();
    let d1 = raw.v1.derivative();
    let speed2 = d0.dot(d0);
    if !(speed2.value() > CYL_FLOOR * CYL_FLOOR) {
        return Err(GeometryError::CylindricalPoint { s: u, speed: libm::sqrt(speed2.value().max(0.0)) });
    }
    Ok(d0.dot(d1) / speed2)
}

pub fn kappa1_at(c: &impl RuledCurve, u: f64) -> Result<f64, GeometryError> {
    Ok(kappa1_series(c, u, 0)?.value())
}

fn striction_series_of(v: &DualVector<Series>) -> Vec3<Series> {
    let e = v.v0;
    let r = v.v0.cross(v.v1);
    let de = e.derivative();
    let offset = -(r.derivative().dot(de) / de.dot(de));
    r + e * offset
}

/// A point of the striction curve with its ruling parameter
/// `t₀ = −r'·e'/|e'|²`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StrictionPoint {
    pub s: f64,
    pub t: f64,
    pub point: Vec3,
}

/// The striction point on the ruling at `s`.
pub fn striction_at(c: &impl RuledCurve, s: f64) -> Result<StrictionPoint, GeometryError> {
    let v = c.taylor(s, 1)?;
    let e = v.v0.value();
    let r = v.v0.cross(v.v1);
    let de = v.v0.coeff(1);
    let speed2 = de.norm_squared();
    if !(speed2 > CYL_FLOOR * CYL_FLOOR) {
        return Err(GeometryError::CylindricalPoint { s, speed: libm::sqrt(speed2) });
    }
    let t = -r.coeff(1).dot(de) / speed2;
    Ok(StrictionPoint { s, t, point: r.value() + e * t })
}

/// Arclength derivatives `σ, σ', …, σ⁽ᵏ⁾` of the striction curve at `s`.
pub fn striction_jet(c: &impl RuledCurve, s: f64, order: usize) -> Result<Vec<Vec3>, GeometryError> {
    check_order(order + 1, c.max_order())?;
    let v = arclength_series(c, s, order + 1)?;
    let sigma = striction_series_of(&v);
    Ok((0..=order).map(|k| sigma.derivative_at(k)).collect())
}

/// Largest `|κ₁|` over `samples` equally spaced parameters.
pub fn max_abs_kappa1(c: &impl RuledCurve, samples: usize) -> Result<f64, GeometryError> {
    let mut m: f64 = 0.0;
    for s in c.domain().linspace(samples) {
        m = m.max(kappa1_at(c, s)?.abs());
    }
    Ok(m)
}

/// Sample count for developability tests.
pub const DEVELOPABLE_SAMPLES: usize = 257;

/// `sup |κ₁| ≤ tol` on a sample grid.
pub fn is_developable(c: &impl RuledCurve, tol: f64) -> Result<bool, GeometryError> {
    Ok(max_abs_kappa1(c, DEVELOPABLE_SAMPLES)? <= tol)
}

/// Options for [`singular_locus`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocusOptions {
    /// Grid size for bracketing.
    pub samples: usize,
    /// `sup |κ₁|` bound for reporting a singular curve.
    pub developable_tol: f64,
    /// Relative bound on `|κ₁|` for accepting a touching zero.
    pub zero_tol: f64,
}

impl Default for LocusOptions {
    fn default() -> Self {
        LocusOptions { samples: 401, developable_tol: DEV_TOL, zero_tol: 1e-9 }
    }
}

/// A singular point `(s₀, t₀)` with its image.
pub type SingularPoint = StrictionPoint;

/// Where `F` fails to be an immersion.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SingularLocus {
    /// Isolated zeros of `κ₁`, each on its striction point.
    Isolated(Vec<SingularPoint>),
    /// Developable surface: the whole striction curve is singular.
    Curve { samples: Vec<StrictionPoint> },
}

impl SingularLocus {
    pub fn points(&self) -> &[StrictionPoint] {
        match self {
            SingularLocus::Isolated(p) => p,
            SingularLocus::Curve { samples } => samples,
        }
    }

    pub fn is_curve(&self) -> bool {
        matches!(self, SingularLocus::Curve { .. })
    }
}

/// Zeros of `κ₁` on the domain, or the striction curve for developables.
///
/// Sign changes on a grid are refined by Brent's method; grid minima of
/// `|κ₁|` without a sign change are refined by golden-section search and
/// accepted when `|κ₁|` falls below `zero_tol` times the grid scale.
pub fn singular_locus(c: &impl RuledCurve, opts: &LocusOptions) -> Result<SingularLocus, GeometryError> {
    let dom = c.domain();
    let grid: Vec<f64> = dom.linspace(opts.samples).collect();
    let mut vals = Vec::with_capacity(grid.len());
    for &s in &grid {
        vals.push(kappa1_at(c, s)?);
    }
    let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale <= opts.developable_tol {
        let samples = grid.iter().map(|&s| striction_at(c, s)).collect::<Result<Vec<_>, _>>()?;
        return Ok(SingularLocus::Curve { samples });
    }
    let k1 = |s: f64| kappa1_at(c, s).unwrap_or(f64::NAN);
    let xtol = 4.0 * f64::EPSILON * (1.0 + dom.start.abs().max(dom.end.abs()));
    let mut roots = Vec::new();
    for i in 0..grid.len() {
        if vals[i] == 0.0 {
            roots.push(grid[i]);
            continue;
        }
        if i + 1 < grid.len() && vals[i + 1] != 0.0 && vals[i].signum() != vals[i + 1].signum() {
            if let Some(r) = numeric::brent(k1, grid[i], grid[i + 1], xtol, 200) {
                roots.push(r);
            }
            continue;
        }
        let interior = i > 0 && i + 1 < grid.len();
        if interior
            && vals[i].abs() <= vals[i - 1].abs()
            && vals[i].abs() <= vals[i + 1].abs()
            && vals[i - 1].signum() == vals[i].signum()
            && vals[i + 1].signum() == vals[i].signum()
        {
            let s = numeric::golden_min(|s| k1(s).abs(), grid[i - 1], grid[i + 1], xtol);
            let s = polish_double_root(c, s, grid[i - 1], grid[i + 1]);
            if k1(s).abs() <= opts.zero_tol * scale.max(1.0) {
                roots.push(s);
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * dom.length().abs().max(1.0));
    let points = roots.into_iter().map(|s| striction_at(c, s)).collect::<Result<Vec<_>, _>>()?;
    Ok(SingularLocus::Isolated(points))
}

/// Newton steps on `κ₁' = 0` from a golden-section minimum.
fn polish_double_root(c: &impl RuledCurve, mut s: f64, lo: f64, hi: f64) -> f64 {
    for _ in 0..6 {
        let Ok(k) = kappa1_series(c, s, 2) else { break };
        let (d1, d2) = (k.derivative_at(1), k.derivative_at(2));
        if d2 == 0.0 {
            break;
        }
        let next = s - d1 / d2;
        if !(lo..=hi).contains(&next) {
            break;
        }
        if (next - s).abs() <= 4.0 * f64::EPSILON * (1.0 + s.abs()) {
            s = next;
            break;
        }
        s = next;
    }
    s
}

/// Frontal data of a developable surface: unit normal `ν = e×e'/|e×e'|`
/// and singularity function `λ = det(F_s, F_t, ν)`.
#[derive(Clone, Debug)]
pub struct FrontalData<C> {
    curve: C,
}

impl<C: RuledCurve> FrontalData<C> {
    pub fn new(curve: C) -> Result<Self, GeometryError> {
        let m = max_abs_kappa1(&curve, DEVELOPABLE_SAMPLES)?;
        if m > DEV_TOL {
            return Err(GeometryError::NotDevelopable { max_kappa1: m });
        }
        Ok(FrontalData { curve })
    }

    pub fn curve(&self) -> &C {
        &self.curve
    }

    /// `ν(s)`, constant along each ruling.
    pub fn normal(&self, s: f64) -> Result<Vec3, GeometryError> {
        let v = self.curve.taylor(s, 1)?;
        let w = v.v0.value().cross(v.v0.coeff(1));
        let n = w.norm();
        if !(n > CYL_FLOOR) {
            return Err(GeometryError::DegenerateDirector { s });
        }
        Ok(w * (1.0 / n))
    }

    /// `λ(s,t) = (r' + t e')·(e × ν)`.
    pub fn lambda(&self, s: f64, t: f64) -> Result<f64, GeometryError> {
        let v = self.curve.taylor(s, 1)?;
        let e = v.v0.value();
        let r = v.v0.cross(v.v1);
        let nu = self.normal(s)?;
        Ok((r.coeff(1) + v.v0.coeff(1) * t).dot(e.cross(nu)))
    }

    /// A vector `(ds, dt)` spanning the kernel of `dF` at the singular point
    /// of the ruling at `s`.
    pub fn null_vector(&self, s: f64) -> Result<(f64, f64), GeometryError> {
        let p = striction_at(&self.curve, s)?;
        let v = self.curve.taylor(s, 1)?;
        let r = v.v0.cross(v.v1);
        let fs = r.coeff(1) + v.v0.coeff(1) * p.t;
        Ok((1.0, -fs.dot(v.v0.value())))
    }

    /// `ηλ, η²λ, η³λ, η⁴λ` at the singular point of the ruling at `s0`.
    ///
    /// Coordinates: `y` is arclength from `s0` and `x = (F − σ(s0))·e(s0)`;
    /// `η = ∂/∂y` at fixed `x`. Along `x = 0`, `λ` divided by the
    /// nonvanishing factor `β/b` is `λ̃ = αb/β − a` with `α = r'·(e×ν)`,
    /// `β = e'·(e×ν)`, `a = (r − σ(s0))·e(s0)`, `b = e·e(s0)`.
    pub fn eta_lambda(&self, s0: f64) -> Result<[f64; 4], GeometryError> {
        check_order(5, self.curve.max_order())?;
        let v = arclength_series(&self.curve, s0, 5)?;
        let e = v.v0;
        let r = v.v0.cross(v.v1);
        let de = e.derivative();
        let w = e.cross(de);
        let wn = w.norm();
        if !(wn.value() > CYL_FLOOR) {
            return Err(GeometryError::DegenerateDirector { s: s0 });
        }
        let nu = w * wn.recip();
        let exn = e.cross(nu);
        let alpha = r.derivative().dot(exn);
        let beta = de.dot(exn);
        let e0 = e.value();
        let sigma0 = striction_series_of(&v).value();
        let a = (r - sigma0.to_series()).dot(e0.to_series());
        let b = e.dot(e0.to_series());
        let lam = alpha * b / beta - a;
        Ok([lam.derivative_at(1), lam.derivative_at(2), lam.derivative_at(3), lam.derivative_at(4)])
    }
}

/// The rigid motion taking the frame lines at `s0` to the coordinate axes
/// (`v̌ ↦ i`, `ň ↦ j`, `ť ↦ k`) and `σ(s0)` to the origin.
pub fn canonical_frame_at(c: &impl RuledCurve, s0: f64) -> Result<DualQuaternion, GeometryError> {
    let (frame, _, _) = frenet_at(c, s0)?;
    let rows = [frame.v.direction(), frame.n.direction(), frame.t.direction()];
    let m = [rows[0].to_array(), rows[1].to_array(), rows[2].to_array()];
    let q = Quaternion::from_matrix(m);
    let sigma = striction_at(c, s0)?.point;
    let t = -q.rotate(sigma);
    Ok(DualQuaternion::from_rotation_translation(q, t))
}

/// Taylor coefficients of `F(s,t) = Σ (r_i + t e_i) sⁱ` in canonical
/// position, with `s` arclength from the base point and `r = v₀×v₁`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CanonicalJet {
    pub r: Vec<Vec3>,
    pub e: Vec<Vec3>,
}

impl CanonicalJet {
    /// Closed-form coefficients through `s³` (for `r`) and `s²` (for `e`)
    /// in terms of the invariants at a singular point.
    pub fn from_invariants(jet: &InvariantJet) -> Self {
        let g = |x: &Vec<f64>, k: usize| x.get(k).copied().unwrap_or(0.0);
        let (t0, t1) = (g(&jet.tau0, 0), g(&jet.tau1, 0));
        let dt1 = g(&jet.tau1, 1);
        let (dk1, ddk1) = (g(&jet.kappa1, 1), g(&jet.kappa1, 2));
        let r = alloc::vec![
            Vec3::zero(),
            Vec3::zero(),
            Vec3::new(0.0, -0.5 * t1, 0.5 * dk1),
            Vec3::new(0.5 * t1, -(2.0 * t0 * dk1 + dt1) / 6.0, (ddk1 - 2.0 * t0 * t1) / 6.0),
        ];
        let e = alloc::vec![Vec3::X, Vec3::Y, Vec3::new(-0.5, 0.0, 0.5 * t0)];
        CanonicalJet { r, e }
    }

    pub fn eval(&self, s: f64, t: f64) -> Vec3 {
        let mut p = Vec3::zero();
        let mut sk = 1.0;
        for k in 0..self.r.len().max(self.e.len()) {
            let rk = self.r.get(k).copied().unwrap_or_default();
            let ek = self.e.get(k).copied().unwrap_or_default();
            p += (rk + ek * t) * sk;
            sk *= s;
        }
        p
    }
}

/// Coefficients of the canonical expansion through `order` at a singular
/// point.
pub fn canonical_jet(c: &impl RuledCurve, s0: f64, order: usize) -> Result<CanonicalJet, GeometryError> {
    check_order(order + 1, c.max_order())?;
    let kappa1 = kappa1_at(c, s0)?;
    if kappa1.abs() > 1e-7 {
        return Err(GeometryError::NotSingular { kappa1 });
    }
    let g = canonical_frame_at(c, s0)?;
    let v = move_series(&g, &arclength_series(c, s0, order)?);
    let r = v.v0.cross(v.v1);
    Ok(CanonicalJet { r: (0..=order).map(|k| r.coeff(k)).collect(), e: (0..=order).map(|k| v.v0.coeff(k)).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{builtin, AnalyticCurve, Interval, Moved};
    use crate::curve::line_series;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    fn dom() -> Interval {
        Interval::new(-1.0, 1.0)
    }

    /// `r = (0, s, s²/2)`-type surface with `κ₁` crossing zero.
    fn crosscap_like() -> AnalyticCurve<impl Fn(Series) -> DualVector<Series>> {
        AnalyticCurve::new(dom(), |s: Series| {
            let z = Series::constant(0.0);
            let one = Series::constant(1.0);
            line_series(Vec3::new(z, z, s * s * 0.5), Vec3::new(one, s, z))
        })
    }

    #[test]
    fn helicoid_invariants() {
        let c = builtin::helicoid(0.7, dom());
        let j = invariant_jet(&c, 0.3, 4).unwrap();
        assert!(close(j.kappa1[0], 0.7, 1e-14));
        for k in 1..=4 {
            assert!(j.kappa1[k].abs() < 1e-12);
        }
        assert!(j.tau0.iter().chain(&j.tau1).all(|x| x.abs() < 1e-12));
        assert!(close(j.kappa0[0], 1.0, 1e-15));
    }

    #[test]
    fn helix_developable_invariants() {
        let (a, h) = (1.5, 0.6);
        let c = builtin::helix_tangent_developable(a, h, Interval::new(-2.0, 2.0));
        let j = invariant_jet(&c, 0.4, 3).unwrap();
        let k_sigma = a / (a * a + h * h);
        let t_sigma = h / (a * a + h * h);
        assert!(j.kappa1[0].abs() < 1e-13);
        assert!(close(j.tau1[0], 1.0 / k_sigma, 1e-12));
        assert!(close(j.tau0[0], t_sigma / k_sigma, 1e-12));
    }

    #[test]
    fn cone_invariants_vanish() {
        let c = builtin::cone(Vec3::new(1.0, 2.0, 3.0), 0.4, dom());
        let j = invariant_jet(&c, 0.2, 3).unwrap();
        assert!(j.kappa1.iter().chain(&j.tau1).all(|x| x.abs() < 1e-12));
        let st = striction_at(&c, 0.5).unwrap();
        assert!((st.point - Vec3::new(1.0, 2.0, 3.0)).max_abs() < 1e-12);
    }

    #[test]
    fn helicoid_striction_is_axis() {
        let c = builtin::helicoid(0.7, dom());
        let st = striction_at(&c, 0.3).unwrap();
        assert!((st.point - Vec3::new(0.0, 0.0, 0.21)).max_abs() < 1e-14);
    }

    #[test]
    fn striction_identities() {
        let c = crosscap_like();
        for s in [-0.5, 0.1, 0.7] {
            let f = frame_series(&c, s, 4).unwrap();
            let sj = striction_jet(&c, s, 1).unwrap();
            let fr = f.frame();
            let j = invariant_jet(&c, s, 0).unwrap();
            assert!((sj[0].cross(fr.v.direction()) - fr.v.moment()).max_abs() < 1e-12);
            assert!((sj[0].cross(fr.n.direction()) - fr.n.moment()).max_abs() < 1e-12);
            assert!((sj[0].cross(fr.t.direction()) - fr.t.moment()).max_abs() < 1e-12);
            let want = fr.v.direction() * j.tau1[0] + fr.t.direction() * j.kappa1[0];
            assert!((sj[1] - want).max_abs() < 1e-12);
        }
    }

    #[test]
    fn frenet_residual_small() {
        let c = crosscap_like();
        for s in [-0.9, 0.0, 0.6] {
            assert!(frenet_residual(&c, s).unwrap() < 1e-12);
            let (fr, k, _) = frenet_at(&c, s).unwrap();
            assert!(fr.defect() < 1e-12);
            assert!(close(k.real, 1.0, 1e-14));
        }
    }

    #[test]
    fn crosscap_like_locus() {
        let c = crosscap_like();
        let loc = singular_locus(&c, &LocusOptions::default()).unwrap();
        let pts = loc.points();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].s.abs() < 1e-12);
        assert!(pts[0].t.abs() < 1e-12);
        assert!(singular_locus(&builtin::helicoid(0.5, dom()), &LocusOptions::default()).unwrap().points().is_empty());
    }

    #[test]
    fn double_zero_found() {
        // κ₁ ∝ s² touches zero without a sign change
        let c = AnalyticCurve::new(dom(), |s: Series| {
            let z = Series::constant(0.0);
            let one = Series::constant(1.0);
            line_series(Vec3::new(z, z, s * s * s * (1.0 / 3.0)), Vec3::new(one, s, z))
        });
        let loc = singular_locus(&c, &LocusOptions::default()).unwrap();
        assert_eq!(loc.points().len(), 1);
        assert!(loc.points()[0].s.abs() < 1e-6);
    }

    #[test]
    fn developable_locus_is_striction_curve() {
        let c = builtin::helix_tangent_developable(1.0, 0.5, Interval::new(0.0, 1.0));
        let loc = singular_locus(&c, &LocusOptions { samples: 11, ..Default::default() }).unwrap();
        assert!(loc.is_curve());
        let c2 = 1.25f64.sqrt();
        for p in loc.points() {
            let (sn, cs) = (p.s / c2).sin_cos();
            assert!((p.point - Vec3::new(cs, sn, 0.5 * p.s / c2)).max_abs() < 1e-12);
        }
        assert!(is_developable(&c, DEV_TOL).unwrap());
        assert!(!is_developable(&builtin::helicoid(0.3, dom()), DEV_TOL).unwrap());
    }

    #[test]
    fn frontal_normal_constant_along_rulings() {
        let c = builtin::helix_tangent_developable(1.0, 0.5, Interval::new(0.0, 2.0));
        let fd = FrontalData::new(&c).unwrap();
        let nu = fd.normal(0.7).unwrap();
        let v = c.taylor(0.7, 1).unwrap();
        let r = v.v0.cross(v.v1);
        for t in [-1.0, 0.5, 2.0] {
            let fs = r.coeff(1) + v.v0.coeff(1) * t;
            assert!(fs.dot(nu).abs() < 1e-12);
            assert!(v.v0.value().dot(nu).abs() < 1e-12);
        }
        let st = striction_at(&c, 0.7).unwrap();
        assert!(fd.lambda(0.7, st.t).unwrap().abs() < 1e-12);
        assert!(fd.lambda(0.7, st.t + 0.1).unwrap().abs() > 1e-3);
        assert!(matches!(FrontalData::new(&builtin::helicoid(0.3, dom())), Err(GeometryError::NotDevelopable { .. })));
    }

    #[test]
    fn eta_lambda_first_derivative_is_minus_tau1() {
        let (a, h) = (1.0, 0.5);
        let c = builtin::helix_tangent_developable(a, h, Interval::new(0.0, 2.0));
        let fd = FrontalData::new(&c).unwrap();
        let d = fd.eta_lambda(0.5).unwrap();
        let tau1 = (a * a + h * h) / a;
        assert!(close(d[0], -tau1, 1e-12));
        // τ₁ constant: A₂ = 0, A₃ = −τ₁, A₄ = 0
        assert!(d[1].abs() < 1e-10);
        assert!(close(d[2], tau1, 1e-10));
        assert!(d[3].abs() < 1e-9);
    }

    #[test]
    fn motion_invariance_and_canonical_frame() {
        let g = DualQuaternion::from_rotation_translation(
            Quaternion::from_axis_angle(Vec3::new(0.3, -1.0, 0.2), 1.1),
            Vec3::new(2.0, -1.0, 0.5),
        );
        let c = crosscap_like();
        let m = Moved::new(&c, g);
        let a = invariant_jet(&c, 0.2, 4).unwrap();
        let b = invariant_jet(&m, 0.2, 4).unwrap();
        assert!(a.mismatch(&b).is_none());
        let h = canonical_frame_at(&m, 0.0).unwrap();
        let hc = canonical_frame_at(&c, 0.0).unwrap();
        // h ∘ g = hc up to sign
        let comp = h * g;
        let d = (comp.q0.dot(hc.q0)).signum();
        assert!((comp.q0.scale(d) - hc.q0).norm() < 1e-12);
        assert!((comp.q1.scale(d) - hc.q1).norm() < 1e-12);
    }

    #[test]
    fn canonical_jet_matches_closed_form() {
        let c = crosscap_like();
        let cj = canonical_jet(&c, 0.0, 3).unwrap();
        let inv = invariant_jet(&c, 0.0, 2).unwrap();
        let want = CanonicalJet::from_invariants(&inv);
        for k in 0..=3 {
            assert!((cj.r[k] - want.r[k]).max_abs() < 1e-12, "r{k}");
        }
        for k in 0..=2 {
            assert!((cj.e[k] - want.e[k]).max_abs() < 1e-12, "e{k}");
        }
        assert!(matches!(canonical_jet(&c, 0.5, 3), Err(GeometryError::NotSingular { .. })));
    }
}
