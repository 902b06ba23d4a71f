//! Surfaces from invariants: Frenet integration, truncated polynomial
//! realizations of invariant jets, tangent developables of a given curve
//! type, the S₁ deformation family and the gallery of singularity types.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{DualNumber, DualVector, Vec3};
use crate::classification::{classify_ruled, Label};
use crate::curve::{check_order, Interval, PolynomialCurve, RuledCurve, DEFAULT_MAX_ORDER};
use crate::error::GeometryError;
use crate::geometry::{invariant_jet, DualFrame};
use crate::polynomial::Polynomial;
use crate::series::{Series, MAX_TERMS};
use crate::tolerance::{TOL_CLS, TOL_UNIT};

/// Reconstruction failures.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ReconstructionError {
    #[error("initial frame is not dual orthonormal (defect {defect:e})")]
    InvalidInitialFrame { defect: f64 },
    #[error("kappa0 = {value} is not positive at u = {u}")]
    NonPositiveKappa0 { u: f64, value: f64 },
    #[error("invalid step {0}")]
    InvalidStep(f64),
    #[error("invalid curve type ({m}, {l}, {r}): all entries must be at least 1")]
    InvalidType { m: usize, l: usize, r: usize },
    #[error("prescription is not on the S1 stratum: {0}")]
    NotOnStratum(String),
    #[error("no gallery surface for label {0}")]
    UnsupportedLabel(Label),
    #[error("gallery search found no prescription for {0}")]
    SearchExhausted(Label),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// One of the three classifying invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Invariant {
    Kappa1,
    Tau0,
    Tau1,
}

/// Derivatives of `κ₁, τ₀, τ₁` at `s = 0` in arclength (`κ₀ ≡ 1`).
#[derive(Clone, Debug, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct JetPrescription {
    pub kappa1: Vec<f64>,
    pub tau0: Vec<f64>,
    pub tau1: Vec<f64>,
}

impl JetPrescription {
    pub fn new(kappa1: &[f64], tau0: &[f64], tau1: &[f64]) -> Self {
        JetPrescription { kappa1: kappa1.to_vec(), tau0: tau0.to_vec(), tau1: tau1.to_vec() }
    }

    pub fn get(&self, which: Invariant, k: usize) -> f64 {
        self.slot(which).get(k).copied().unwrap_or(0.0)
    }

    fn slot(&self, which: Invariant) -> &Vec<f64> {
        match which {
            Invariant::Kappa1 => &self.kappa1,
            Invariant::Tau0 => &self.tau0,
            Invariant::Tau1 => &self.tau1,
        }
    }

    /// A copy with the `k`-th derivative of one invariant shifted by `delta`.
    pub fn perturbed(&self, which: Invariant, k: usize, delta: f64) -> Self {
        let mut out = self.clone();
        let v = match which {
            Invariant::Kappa1 => &mut out.kappa1,
            Invariant::Tau0 => &mut out.tau0,
            Invariant::Tau1 => &mut out.tau1,
        };
        if v.len() <= k {
            v.resize(k + 1, 0.0);
        }
        v[k] += delta;
        out
    }

    /// The prescribed jets as an [`InvariantJet`](crate::geometry::InvariantJet)
    /// through `order`, padded with zeros.
    pub fn to_jet(&self, order: usize) -> crate::geometry::InvariantJet {
        let pad = |v: &Vec<f64>| (0..=order).map(|k| v.get(k).copied().unwrap_or(0.0)).collect::<Vec<_>>();
        crate::geometry::InvariantJet::from_derivatives(0.0, &pad(&self.kappa1), &pad(&self.tau0), &pad(&self.tau1))
    }

    /// Taylor polynomials of the jets, with `κ₀ = 1`.
    pub fn to_prescription(&self, domain: Interval) -> InvariantPrescription {
        InvariantPrescription {
            domain,
            kappa0: Polynomial::constant(1.0),
            kappa1: Polynomial::from_derivatives(&self.kappa1),
            tau0: Polynomial::from_derivatives(&self.tau0),
            tau1: Polynomial::from_derivatives(&self.tau1),
        }
    }
}

/// Invariant functions on an interval, in an arbitrary parameter `u` with
/// `κ₀(u) = |v₀'(u)| > 0`; `κ₁, τ₀, τ₁` are the arclength invariants.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InvariantPrescription {
    pub domain: Interval,
    pub kappa0: Polynomial,
    pub kappa1: Polynomial,
    pub tau0: Polynomial,
    pub tau1: Polynomial,
}

impl InvariantPrescription {
    /// Dual curvature and dual torsion with respect to `u`:
    /// `κ₀(1 + εκ₁)` and `κ₀(τ₀ + ετ₁)`.
    pub fn coefficients(&self, u: f64) -> (DualNumber, DualNumber) {
        let k0 = self.kappa0.eval(u);
        (
            DualNumber::new(k0, k0 * self.kappa1.eval(u)),
            DualNumber::new(k0 * self.tau0.eval(u), k0 * self.tau1.eval(u)),
        )
    }

    fn coefficient_series(&self, u: f64, len: usize) -> (DualNumber<Series>, DualNumber<Series>) {
        let o = len - 1;
        let k0 = self.kappa0.taylor(u, o);
        (
            DualNumber::new(k0, k0 * self.kappa1.taylor(u, o)),
            DualNumber::new(k0 * self.tau0.taylor(u, o), k0 * self.tau1.taylor(u, o)),
        )
    }
}

type Frame3 = [DualVector; 3];

fn frenet_rhs(a: DualNumber, b: DualNumber, x: &Frame3) -> Frame3 {
    let [v, n, t] = *x;
    [n.scale(a), t.scale(b) - v.scale(a), -n.scale(b)]
}

fn axpy(x: &Frame3, h: f64, d: &Frame3) -> Frame3 {
    let k = DualNumber::new(h, 0.0);
    [x[0] + d[0].scale(k), x[1] + d[1].scale(k), x[2] + d[2].scale(k)]
}

/// Dual Gram–Schmidt: normalize `v̌`, remove its component from `ň`,
/// normalize, and set `ť = v̌×ň`.
fn orthonormalize(x: &Frame3) -> Frame3 {
    let v = x[0].normalized();
    let n = (x[1] - v.scale(x[1].dot(v))).normalized();
    [v, n, v.cross(n)]
}

/// Taylor solution of the Frenet system about `u0` with frame `x0` there,
/// `len` coefficients per component.
fn frenet_taylor(p: &InvariantPrescription, u0: f64, x0: &Frame3, len: usize) -> [DualVector<Series>; 3] {
    let (a, b) = p.coefficient_series(u0, len);
    let mut c: Vec<Frame3> = Vec::with_capacity(len);
    c.push(*x0);
    for k in 0..len - 1 {
        let mut acc = [DualVector::zero(); 3];
        for j in 0..=k {
            let aj = DualNumber::new(a.real.coeff(j), a.dual.coeff(j));
            let bj = DualNumber::new(b.real.coeff(j), b.dual.coeff(j));
            let d = frenet_rhs(aj, bj, &c[k - j]);
            acc = axpy(&acc, 1.0, &d);
        }
        let inv = 1.0 / (k + 1) as f64;
        c.push([acc[0] * DualNumber::new(inv, 0.0), acc[1] * DualNumber::new(inv, 0.0), acc[2] * DualNumber::new(inv, 0.0)]);
    }
    let mut out = [DualVector::<Series>::zero(); 3];
    for (i, o) in out.iter_mut().enumerate() {
        let comp = |f: fn(&DualVector) -> f64| Series::from_coeffs(&c.iter().map(|x| f(&x[i])).collect::<Vec<_>>());
        *o = DualVector::new(
            Vec3::new(comp(|d| d.v0.x), comp(|d| d.v0.y), comp(|d| d.v0.z)),
            Vec3::new(comp(|d| d.v1.x), comp(|d| d.v1.y), comp(|d| d.v1.z)),
        );
    }
    out
}

/// Step used when none is given.
pub const DEFAULT_STEP: f64 = 1e-3;

/// A curve obtained by integrating the Frenet system.
#[derive(Clone, Debug)]
pub struct ReconstructedCurve {
    prescription: InvariantPrescription,
    nodes: Vec<f64>,
    frames: Vec<DualFrame>,
    init: DualFrame,
}

impl ReconstructedCurve {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn frames(&self) -> &[DualFrame] {
        &self.frames
    }

    pub fn initial_frame(&self) -> DualFrame {
        self.init
    }

    pub fn prescription(&self) -> &InvariantPrescription {
        &self.prescription
    }

    /// Largest dual orthonormality defect over the nodes.
    pub fn max_defect(&self) -> f64 {
        self.frames.iter().fold(0.0, |m, f| m.max(f.defect()))
    }

    fn step(&self) -> f64 {
        if self.nodes.len() > 1 {
            self.nodes[1] - self.nodes[0]
        } else {
            1.0
        }
    }
}

impl RuledCurve for ReconstructedCurve {
    fn domain(&self) -> Interval {
        self.prescription.domain
    }

    /// Taylor solution of the Frenet system from the nearest node.
    fn taylor(&self, s: f64, order: usize) -> Result<DualVector<Series>, GeometryError> {
        check_order(order, DEFAULT_MAX_ORDER)?;
        let dom = self.prescription.domain;
        let h = self.step();
        if !(s >= dom.start - h && s <= dom.end + h) {
            return Err(GeometryError::OutsideDomain { s, start: dom.start, end: dom.end });
        }
        let i = libm::round((s - dom.start) / h).clamp(0.0, (self.nodes.len() - 1) as f64) as usize;
        let [v, _, _] = frenet_taylor(&self.prescription, self.nodes[i], &self.frames[i].rows(), MAX_TERMS);
        let dx = s - self.nodes[i];
        let shifted = DualVector::new(v.v0.map(|c| c.shift(dx)), v.v1.map(|c| c.shift(dx)));
        Ok(shifted.truncate(order + 1).normalized())
    }
}

/// Classical RK4 on the frame system from `init` at the start of the
/// domain, with dual Gram–Schmidt after every step. The step is shrunk to
/// divide the domain evenly.
pub fn integrate_frenet(
    p: &InvariantPrescription,
    init: &DualFrame,
    step: f64,
) -> Result<ReconstructedCurve, ReconstructionError> {
    let defect = init.defect();
    if !(defect <= TOL_UNIT) {
        return Err(ReconstructionError::InvalidInitialFrame { defect });
    }
    let len = p.domain.length();
    if !(step > 0.0) || !(len > 0.0) {
        return Err(ReconstructionError::InvalidStep(step));
    }
    let n = libm::ceil(len / step - 1e-9).max(1.0) as usize;
    let h = len / n as f64;
    let check = |u: f64| {
        let k0 = p.kappa0.eval(u);
        if k0 > 0.0 {
            Ok(())
        } else {
            Err(ReconstructionError::NonPositiveKappa0 { u, value: k0 })
        }
    };
    let f = |u: f64, x: &Frame3| {
        let (a, b) = p.coefficients(u);
        frenet_rhs(a, b, x)
    };
    let mut nodes = Vec::with_capacity(n + 1);
    let mut frames = Vec::with_capacity(n + 1);
    let mut x = init.rows();
    nodes.push(p.domain.start);
    frames.push(*init);
    check(p.domain.start)?;
    for i in 0..n {
        let u = p.domain.start + h * i as f64;
        check(u + 0.5 * h)?;
        check(u + h)?;
        let k1 = f(u, &x);
        let k2 = f(u + 0.5 * h, &axpy(&x, 0.5 * h, &k1));
        let k3 = f(u + 0.5 * h, &axpy(&x, 0.5 * h, &k2));
        let k4 = f(u + h, &axpy(&x, h, &k3));
        let mut next = x;
        for (k, w) in [(k1, h / 6.0), (k2, h / 3.0), (k3, h / 3.0), (k4, h / 6.0)] {
            next = axpy(&next, w, &k);
        }
        x = orthonormalize(&next);
        nodes.push(if i + 1 == n { p.domain.end } else { p.domain.start + h * (i + 1) as f64 });
        frames.push(DualFrame::from_rows(x));
    }
    Ok(ReconstructedCurve { prescription: p.clone(), nodes, frames, init: *init })
}

/// Degree at which realized jets are truncated.
pub const TRUNCATION_ORDER: usize = 16;

/// A polynomial ruled surface whose invariant jets at `s = 0` are the
/// prescribed ones: the Frenet system is solved as a Taylor series from
/// the coordinate frame, truncated at degree 16, and renormalized to unit
/// dual vectors on evaluation.
pub fn truncated_polynomial_surface(jets: &JetPrescription, domain: Interval) -> PolynomialCurve {
    let p = jets.to_prescription(domain);
    let [v, _, _] = frenet_taylor(&p, 0.0, &DualFrame::IDENTITY.rows(), TRUNCATION_ORDER + 1);
    let poly = |s: &Series| Polynomial::new(s.coeffs().to_vec());
    PolynomialCurve::from_lines(
        domain,
        [poly(&v.v0.x), poly(&v.v0.y), poly(&v.v0.z)],
        [poly(&v.v1.x), poly(&v.v1.y), poly(&v.v1.z)],
    )
}

/// The tangent developable with parameterization `x = t`,
/// `y = a(s) + t b(s)`, `z = (ℓ+r)(m+ℓ+r) ∫₀ˢ uʳ ∂y/∂u du`, where
/// `a = s^{m+ℓ}(1 + s φ(s))` and `b = s^ℓ(1 + s ϕ(s))`. Its striction curve
/// has type `(m, m+ℓ, m+ℓ+r)` at `s = 0`.
pub fn tangent_developable_of_type(
    m: usize,
    l: usize,
    r: usize,
    phi: &Polynomial,
    varphi: &Polynomial,
    domain: Interval,
) -> Result<PolynomialCurve, ReconstructionError> {
    if m == 0 || l == 0 || r == 0 {
        return Err(ReconstructionError::InvalidType { m, l, r });
    }
    let one = Polynomial::constant(1.0);
    let a = one.add(&phi.shift_degree(1)).shift_degree(m + l);
    let b = one.add(&varphi.shift_degree(1)).shift_degree(l);
    let c = ((l + r) * (m + l + r)) as f64;
    let z = |p: &Polynomial| p.derivative().shift_degree(r).integral().scale(c);
    let zero = Polynomial::zero();
    Ok(PolynomialCurve::from_base_director(
        domain,
        [zero, a.clone(), z(&a)],
        [one, b.clone(), z(&b)],
    ))
}

/// The family `κ₁ ↦ κ₁ + λ` through an S₁ prescription.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationFamily {
    pub base: JetPrescription,
    pub domain: Interval,
    /// Parameter range `W`.
    pub parameters: Interval,
}

impl DeformationFamily {
    pub fn prescription(&self, lambda: f64) -> JetPrescription {
        self.base.perturbed(Invariant::Kappa1, 0, lambda)
    }

    pub fn member(&self, lambda: f64) -> PolynomialCurve {
        truncated_polynomial_surface(&self.prescription(lambda), self.domain)
    }

    /// Number of crosscaps near `s = 0` predicted by `κ₁ ≈ κ₁''s²/2 + λ`.
    pub fn expected_crosscaps(&self, lambda: f64) -> usize {
        if lambda * self.base.get(Invariant::Kappa1, 2) < 0.0 {
            2
        } else {
            0
        }
    }
}

/// One-parameter deformation of an S₁ point by shifting `κ₁`.
pub fn versal_family_s1(base: &JetPrescription, domain: Interval) -> Result<DeformationFamily, ReconstructionError> {
    let g = |w, k| base.get(w, k);
    let scale = [g(Invariant::Kappa1, 2), g(Invariant::Tau0, 0), g(Invariant::Tau1, 0)]
        .iter()
        .fold(1.0f64, |m, x| m.max(x.abs()));
    let tol = TOL_CLS * scale;
    let fail = |why: &str| Err(ReconstructionError::NotOnStratum(String::from(why)));
    if g(Invariant::Kappa1, 0).abs() > tol || g(Invariant::Kappa1, 1).abs() > tol {
        return fail("kappa1 and kappa1' must vanish");
    }
    if g(Invariant::Tau1, 0).abs() <= tol {
        return fail("tau1 must be nonzero");
    }
    let k2 = g(Invariant::Kappa1, 2);
    if k2.abs() <= tol || (k2 - 2.0 * g(Invariant::Tau0, 0) * g(Invariant::Tau1, 0)).abs() <= tol * scale {
        return fail("kappa1'' must avoid 0 and 2 tau0 tau1");
    }
    Ok(DeformationFamily { base: base.clone(), domain, parameters: Interval::new(-1e-2, 1e-2) })
}

/// Parameter interval of gallery surfaces.
pub const GALLERY_DOMAIN: Interval = Interval::new(-0.25, 0.25);

/// A surface realizing a singularity type at `s = 0`.
#[derive(Clone, Debug)]
pub struct GalleryEntry {
    pub label: Label,
    pub prescription: JetPrescription,
    pub curve: PolynomialCurve,
}

const COEFFS: &[f64] = &[1.0, -1.0, 2.0, -2.0, 3.0, -3.0];
const WITH_ZERO: &[f64] = &[0.0, 1.0, -1.0, 2.0, -2.0, 3.0, -3.0];
const B2_QUARTIC: &[f64] = &[0.0, 30.0, -30.0];

type Builder = fn(&[f64]) -> JetPrescription;

fn template(label: Label) -> Option<(&'static [&'static [f64]], Builder)> {
    use Label::*;
    let t: (&'static [&'static [f64]], Builder) = match label {
        S0 => (&[COEFFS], |x| JetPrescription::new(&[0.0, x[0]], &[0.0], &[0.0])),
        S1Plus | S1Minus => {
            (&[COEFFS, WITH_ZERO, COEFFS], |x| JetPrescription::new(&[0.0, 0.0, x[0]], &[x[1]], &[x[2]]))
        }
        S2 => (&[COEFFS, COEFFS, COEFFS], |x| JetPrescription::new(&[0.0, 0.0, 0.0, x[0]], &[x[1]], &[x[2]])),
        S3Plus | S3Minus => {
            (&[COEFFS, COEFFS, COEFFS], |x| JetPrescription::new(&[0.0, 0.0, 0.0, 0.0, x[0]], &[x[1]], &[x[2]]))
        }
        S4Plus | S4Minus => (&[COEFFS, COEFFS, COEFFS], |x| {
            JetPrescription::new(&[0.0, 0.0, 0.0, 0.0, 0.0, x[0]], &[x[1]], &[x[2]])
        }),
        B2Plus | B2Minus => (&[COEFFS, COEFFS, B2_QUARTIC], |x| {
            JetPrescription::new(&[0.0, 0.0, 2.0 * x[0] * x[1], 0.0, x[2]], &[x[0]], &[x[1]])
        }),
        H2 => (&[COEFFS, COEFFS, COEFFS], |x| JetPrescription::new(&[0.0, 0.0, x[0]], &[x[1]], &[0.0, x[2]])),
        C3Plus | C3Minus => (&[COEFFS, WITH_ZERO, COEFFS], |x| {
            JetPrescription::new(&[0.0, 0.0, 0.0, x[0]], &[0.0, x[1]], &[x[2]])
        }),
        C4Plus | C4Minus => (&[COEFFS, COEFFS, COEFFS], |x| {
            JetPrescription::new(&[0.0, 0.0, 0.0, 0.0, x[0]], &[0.0, x[1]], &[x[2]])
        }),
        C5Plus | C5Minus => (&[COEFFS, COEFFS, COEFFS], |x| {
            JetPrescription::new(&[0.0, 0.0, 0.0, 0.0, 0.0, x[0]], &[0.0, x[1]], &[x[2]])
        }),
        F4 => (&[COEFFS, COEFFS, WITH_ZERO], |x| {
            JetPrescription::new(&[0.0, 0.0, 0.0, 2.0 * x[0] * x[1], x[2]], &[0.0, x[0]], &[x[1]])
        }),
        CuspidalEdge => (&[COEFFS, COEFFS], |x| JetPrescription::new(&[0.0], &[x[0]], &[x[1]])),
        CuspidalCrosscap => (&[COEFFS, COEFFS], |x| JetPrescription::new(&[0.0], &[0.0, x[0]], &[x[1]])),
        CuspidalS1Plus => (&[COEFFS, COEFFS], |x| JetPrescription::new(&[0.0], &[0.0, 0.0, x[0]], &[x[1]])),
        CuspidalC3Plus => (&[COEFFS, COEFFS], |x| JetPrescription::new(&[0.0], &[0.0, 0.0, 0.0, x[0]], &[x[1]])),
        Swallowtail => (&[COEFFS, COEFFS], |x| JetPrescription::new(&[0.0], &[x[0]], &[0.0, x[1]])),
        CuspidalA4 => (&[COEFFS, COEFFS], |x| JetPrescription::new(&[0.0], &[x[0]], &[0.0, 0.0, x[1]])),
        CuspidalA5 => (&[COEFFS, COEFFS], |x| JetPrescription::new(&[0.0], &[x[0]], &[0.0, 0.0, 0.0, x[1]])),
        T1 => (&[COEFFS], |x| JetPrescription::new(&[0.0], &[0.0], &[0.0, x[0]])),
        T2 => (&[COEFFS], |x| JetPrescription::new(&[0.0], &[0.0], &[0.0, 0.0, x[0]])),
        _ => return None,
    };
    Some(t)
}

/// The entry to perturb to leave the stratum of `label` towards a type of
/// lower codimension.
pub fn off_stratum_direction(label: Label) -> Option<(Invariant, usize)> {
    use Invariant::*;
    use Label::*;
    Some(match label {
        S0 | CuspidalEdge => (Kappa1, 0),
        S1Plus | S1Minus => (Kappa1, 1),
        S2 | B2Plus | B2Minus => (Kappa1, 2),
        S3Plus | S3Minus | C4Plus | C4Minus | F4 => (Kappa1, 3),
        S4Plus | S4Minus | C5Plus | C5Minus => (Kappa1, 4),
        H2 | Swallowtail => (Tau1, 0),
        C3Plus | C3Minus | CuspidalCrosscap | T1 => (Tau0, 0),
        CuspidalS1Plus => (Tau0, 1),
        CuspidalC3Plus => (Tau0, 2),
        CuspidalA4 | T2 => (Tau1, 1),
        CuspidalA5 => (Tau1, 2),
        _ => return None,
    })
}

/// Jet order used to validate gallery surfaces.
const GALLERY_JET_ORDER: usize = 5;

/// A surface of the given type at `s = 0`, found by a deterministic
/// lexicographic search over small integer prescriptions and validated by
/// classifying the realized surface.
pub fn gallery(label: Label) -> Result<GalleryEntry, ReconstructionError> {
    let (slots, build) = template(label).ok_or(ReconstructionError::UnsupportedLabel(label))?;
    let mut idx = alloc::vec![0usize; slots.len()];
    loop {
        let x: Vec<f64> = idx.iter().zip(slots).map(|(&i, s)| s[i]).collect();
        let prescription = build(&x);
        let predicted = classify_ruled(&prescription.to_jet(GALLERY_JET_ORDER)).map(|r| r.label);
        if predicted == Ok(label) {
            let curve = truncated_polynomial_surface(&prescription, GALLERY_DOMAIN);
            let jet = invariant_jet(&curve, 0.0, GALLERY_JET_ORDER)?;
            if classify_ruled(&jet).map(|r| r.label) == Ok(label) {
                return Ok(GalleryEntry { label, prescription, curve });
            }
        }
        // advance the last slot fastest
        let mut k = slots.len();
        loop {
            if k == 0 {
                return Err(ReconstructionError::SearchExhausted(label));
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < slots[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::builtin;
    use crate::geometry::{frenet_at, is_developable, singular_locus, LocusOptions};
    use crate::tolerance::DEV_TOL;

    #[test]
    fn great_circle_pencil() {
        let p = JetPrescription::default().to_prescription(Interval::new(0.0, 2.0));
        let c = integrate_frenet(&p, &DualFrame::IDENTITY, 1e-2).unwrap();
        for (u, f) in c.nodes().iter().zip(c.frames()) {
            let v = f.v.dual_vector();
            assert!((v.v0 - Vec3::new(libm::cos(*u), libm::sin(*u), 0.0)).max_abs() < 1e-9);
            assert!(v.v1.max_abs() < 1e-14);
        }
        assert!(c.max_defect() < 1e-13);
    }

    #[test]
    fn rejects_bad_inputs() {
        let mut p = JetPrescription::default().to_prescription(Interval::new(0.0, 1.0));
        let mut bad = DualFrame::IDENTITY;
        bad.t = bad.v;
        assert!(matches!(integrate_frenet(&p, &bad, 1e-2), Err(ReconstructionError::InvalidInitialFrame { .. })));
        p.kappa0 = Polynomial::new(alloc::vec![1.0, -2.0]);
        assert!(matches!(
            integrate_frenet(&p, &DualFrame::IDENTITY, 1e-2),
            Err(ReconstructionError::NonPositiveKappa0 { .. })
        ));
    }

    #[test]
    fn reconstruction_reproduces_invariants() {
        let p = InvariantPrescription {
            domain: Interval::new(0.0, 1.0),
            kappa0: Polynomial::new(alloc::vec![1.0, 0.5]),
            kappa1: Polynomial::new(alloc::vec![0.3, -1.0]),
            tau0: Polynomial::new(alloc::vec![0.2, 0.0, 1.0]),
            tau1: Polynomial::new(alloc::vec![1.0]),
        };
        let c = integrate_frenet(&p, &DualFrame::IDENTITY, 1e-3).unwrap();
        for u in [0.1, 0.5, 0.93] {
            let j = invariant_jet(&c, u, 1).unwrap();
            assert!((j.kappa1[0] - p.kappa1.eval(u)).abs() < 1e-9);
            assert!((j.tau0[0] - p.tau0.eval(u)).abs() < 1e-9);
            assert!((j.tau1[0] - p.tau1.eval(u)).abs() < 1e-9);
        }
    }

    #[test]
    fn truncated_surface_realizes_jets() {
        let jets = JetPrescription::new(&[0.0, 1.0], &[0.5, -1.0], &[2.0, 0.0, 3.0]);
        let c = truncated_polynomial_surface(&jets, GALLERY_DOMAIN);
        let j = invariant_jet(&c, 0.0, 4).unwrap();
        let want = jets.to_jet(4);
        assert!(j.mismatch(&want).is_none(), "{j:?}");
        assert!(j.kappa1.iter().zip(&want.kappa1).all(|(a, b)| (a - b).abs() < 1e-10));
    }

    #[test]
    fn ishikawa_surface_is_developable_with_type() {
        let z = Polynomial::zero();
        let c = tangent_developable_of_type(1, 1, 1, &z, &z, Interval::new(-0.5, 0.5)).unwrap();
        let (r, e) = c.polynomials();
        assert_eq!(r[2].coeffs[..4], [0.0, 0.0, 0.0, 4.0]);
        assert_eq!(e[2].coeffs[..3], [0.0, 0.0, 3.0]);
        assert!(r[2].coeffs[4..].iter().chain(&e[2].coeffs[3..]).all(|c| *c == 0.0));
        assert!(is_developable(&c, DEV_TOL).unwrap());
        let sw = tangent_developable_of_type(2, 1, 1, &z, &z, Interval::new(-0.5, 0.5)).unwrap();
        let j = invariant_jet(&sw, 0.0, 3).unwrap();
        assert_eq!(classify_ruled(&j).unwrap().label, Label::Swallowtail);
        assert!(matches!(
            tangent_developable_of_type(1, 1, 0, &z, &z, GALLERY_DOMAIN),
            Err(ReconstructionError::InvalidType { .. })
        ));
    }

    #[test]
    fn s1_family_crosscaps() {
        let base = JetPrescription::new(&[0.0, 0.0, 1.0], &[0.0], &[1.0]);
        let fam = versal_family_s1(&base, GALLERY_DOMAIN).unwrap();
        for (lambda, n) in [(-1e-3, 2), (1e-3, 0)] {
            assert_eq!(fam.expected_crosscaps(lambda), n);
            let loc = singular_locus(&fam.member(lambda), &LocusOptions::default()).unwrap();
            assert_eq!(loc.points().len(), n);
        }
        assert!(versal_family_s1(&JetPrescription::new(&[0.0, 1.0], &[0.0], &[1.0]), GALLERY_DOMAIN).is_err());
    }

    #[test]
    fn gallery_examples() {
        let s0 = gallery(Label::S0).unwrap();
        assert_eq!(s0.prescription.kappa1, alloc::vec![0.0, 1.0]);
        let ce = gallery(Label::CuspidalEdge).unwrap();
        assert_eq!((ce.prescription.tau0[0], ce.prescription.tau1[0]), (1.0, 1.0));
        assert!(matches!(gallery(Label::B3Candidate), Err(ReconstructionError::UnsupportedLabel(_))));
        let (f, _, _) = frenet_at(&s0.curve, 0.0).unwrap();
        assert!(f.defect() < 1e-12);
    }

    #[test]
    fn congruent_reconstructions() {
        let c = builtin::helicoid(0.4, Interval::new(0.0, 1.0));
        let (f, _, _) = frenet_at(&c, 0.0).unwrap();
        let p = JetPrescription::new(&[0.4], &[0.0], &[0.0]).to_prescription(Interval::new(0.0, 1.0));
        let r = integrate_frenet(&p, &f, 1e-3).unwrap();
        for s in [0.0, 0.4, 1.0] {
            assert!((r.point(s, 0.7).unwrap() - c.point(s, 0.7).unwrap()).max_abs() < 1e-10);
        }
    }

    #[test]
    fn every_gallery_label_is_realized() {
        for label in Label::ALL {
            match gallery(label) {
                Ok(g) => {
                    let j = invariant_jet(&g.curve, 0.0, GALLERY_JET_ORDER).unwrap();
                    assert_eq!(classify_ruled(&j).unwrap().label, label);
                    assert!(off_stratum_direction(label).is_some());
                }
                Err(ReconstructionError::UnsupportedLabel(_)) => assert!(template(label).is_none()),
                Err(e) => panic!("{label}: {e}"),
            }
        }
    }

    #[test]
    fn developable_gallery_eta_lambda() {
        use crate::geometry::FrontalData;
        for label in Label::ALL.into_iter().filter(|l| l.is_developable_type()) {
            let Ok(g) = gallery(label) else { continue };
            let p = &g.prescription;
            if p.get(Invariant::Tau0, 0) == 0.0 {
                continue;
            }
            let f = FrontalData::new(&g.curve).unwrap();
            let eta = f.eta_lambda(0.0).unwrap();
            let t = |k| p.get(Invariant::Tau1, k);
            let want = [-t(0), -t(1), -(t(2) - t(0)), -(t(3) - 3.0 * t(1))];
            for k in 0..4 {
                assert!((eta[k] - want[k]).abs() < 1e-5 * (1.0 + want[k].abs()), "{label} {k}: {eta:?} {want:?}");
            }
        }
    }
}
