//! Recognition of singularity types from invariant jets.
//!
//! Ruled surfaces are classified by the derivatives of `κ₁, τ₀, τ₁` at a
//! zero of `κ₁`; developables (`κ₁ ≡ 0`) by those of `τ₀, τ₁`. A jet entry
//! counts as zero when it is at most `tol · scale`, with `scale` the largest
//! jet entry (at least 1); a polynomial condition counts as zero when it is
//! at most `tol` times the absolute sum of its terms (at least 1).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::curve::RuledCurve;
use crate::error::GeometryError;
use crate::geometry::{FrontalData, InvariantJet};
use crate::tolerance::TOL_CLS;

/// Vanishing order of a jet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Order {
    Finite(usize),
    /// No entry exceeds the threshold within the available order.
    Infinite,
}

/// Smallest `k` with `|jet[k]| > tol · max(1, max |jet[i]|)`.
pub fn vanishing_order(jet: &[f64], tol: f64) -> Order {
    let scale = jet.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    match jet.iter().position(|x| x.abs() > tol * scale) {
        Some(k) => Order::Finite(k),
        None => Order::Infinite,
    }
}

/// Singularity types of ruled and developable surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Immersion,
    S0,
    S1Plus,
    S1Minus,
    S2,
    B2Plus,
    B2Minus,
    H2,
    S3Plus,
    S3Minus,
    C3Plus,
    C3Minus,
    B3Candidate,
    H3Candidate,
    P3Candidate,
    F4,
    S4Plus,
    S4Minus,
    C4Plus,
    C4Minus,
    C5Plus,
    C5Minus,
    CuspidalEdge,
    CuspidalCrosscap,
    CuspidalS1Plus,
    CuspidalS1Minus,
    CuspidalC3Plus,
    CuspidalC3Minus,
    Swallowtail,
    CuspidalA4,
    CuspidalA5,
    T1,
    T2,
    A3Plus,
    A3Minus,
    Dk,
    Unresolved,
}

impl Label {
    pub const ALL: [Label; 37] = [
        Label::Immersion,
        Label::S0,
        Label::S1Plus,
        Label::S1Minus,
        Label::S2,
        Label::B2Plus,
        Label::B2Minus,
        Label::H2,
        Label::S3Plus,
        Label::S3Minus,
        Label::C3Plus,
        Label::C3Minus,
        Label::B3Candidate,
        Label::H3Candidate,
        Label::P3Candidate,
        Label::F4,
        Label::S4Plus,
        Label::S4Minus,
        Label::C4Plus,
        Label::C4Minus,
        Label::C5Plus,
        Label::C5Minus,
        Label::CuspidalEdge,
        Label::CuspidalCrosscap,
        Label::CuspidalS1Plus,
        Label::CuspidalS1Minus,
        Label::CuspidalC3Plus,
        Label::CuspidalC3Minus,
        Label::Swallowtail,
        Label::CuspidalA4,
        Label::CuspidalA5,
        Label::T1,
        Label::T2,
        Label::A3Plus,
        Label::A3Minus,
        Label::Dk,
        Label::Unresolved,
    ];

    /// Ruled-surface types decided without unprinted moduli.
    pub const RULED_DECIDABLE: [Label; 18] = [
        Label::S0,
        Label::S1Plus,
        Label::S1Minus,
        Label::S2,
        Label::B2Plus,
        Label::B2Minus,
        Label::H2,
        Label::S3Plus,
        Label::S3Minus,
        Label::C3Plus,
        Label::C3Minus,
        Label::F4,
        Label::S4Plus,
        Label::S4Minus,
        Label::C4Plus,
        Label::C4Minus,
        Label::C5Plus,
        Label::C5Minus,
    ];

    /// Developable types that occur.
    pub const DEVELOPABLE: [Label; 9] = [
        Label::CuspidalEdge,
        Label::CuspidalCrosscap,
        Label::CuspidalS1Plus,
        Label::CuspidalC3Plus,
        Label::Swallowtail,
        Label::CuspidalA4,
        Label::CuspidalA5,
        Label::T1,
        Label::T2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Immersion => "Immersion",
            Label::S0 => "S0",
            Label::S1Plus => "S1+",
            Label::S1Minus => "S1-",
            Label::S2 => "S2",
            Label::B2Plus => "B2+",
            Label::B2Minus => "B2-",
            Label::H2 => "H2",
            Label::S3Plus => "S3+",
            Label::S3Minus => "S3-",
            Label::C3Plus => "C3+",
            Label::C3Minus => "C3-",
            Label::B3Candidate => "B3_candidate",
            Label::H3Candidate => "H3_candidate",
            Label::P3Candidate => "P3_candidate",
            Label::F4 => "F4",
            Label::S4Plus => "S4+",
            Label::S4Minus => "S4-",
            Label::C4Plus => "C4+",
            Label::C4Minus => "C4-",
            Label::C5Plus => "C5+",
            Label::C5Minus => "C5-",
            Label::CuspidalEdge => "cE",
            Label::CuspidalCrosscap => "cS0",
            Label::CuspidalS1Plus => "cS1+",
            Label::CuspidalS1Minus => "cS1-",
            Label::CuspidalC3Plus => "cC3+",
            Label::CuspidalC3Minus => "cC3-",
            Label::Swallowtail => "Sw",
            Label::CuspidalA4 => "cA4",
            Label::CuspidalA5 => "cA5",
            Label::T1 => "T1",
            Label::T2 => "T2",
            Label::A3Plus => "A3+",
            Label::A3Minus => "A3-",
            Label::Dk => "Dk",
            Label::Unresolved => "Unresolved",
        }
    }

    /// A-codimension; `None` for labels without a fixed value.
    pub fn codimension(self) -> Option<u32> {
        Some(match self {
            Label::Immersion => 0,
            Label::CuspidalEdge => 1,
            Label::S0 | Label::CuspidalCrosscap | Label::Swallowtail => 2,
            Label::S1Plus | Label::S1Minus | Label::CuspidalS1Plus | Label::CuspidalS1Minus => 3,
            Label::CuspidalA4 | Label::T1 => 3,
            Label::S2 | Label::B2Plus | Label::B2Minus | Label::H2 => 4,
            Label::CuspidalC3Plus | Label::CuspidalC3Minus | Label::CuspidalA5 | Label::T2 => 4,
            Label::S3Plus | Label::S3Minus | Label::C3Plus | Label::C3Minus => 5,
            Label::B3Candidate | Label::H3Candidate | Label::P3Candidate => 5,
            Label::F4 | Label::S4Plus | Label::S4Minus | Label::C4Plus | Label::C4Minus => 6,
            Label::C5Plus | Label::C5Minus => 7,
            Label::A3Plus | Label::A3Minus | Label::Dk | Label::Unresolved => return None,
        })
    }

    /// Types of developable surfaces (including those that never occur).
    pub fn is_developable_type(self) -> bool {
        matches!(
            self,
            Label::CuspidalEdge
                | Label::CuspidalCrosscap
                | Label::CuspidalS1Plus
                | Label::CuspidalS1Minus
                | Label::CuspidalC3Plus
                | Label::CuspidalC3Minus
                | Label::Swallowtail
                | Label::CuspidalA4
                | Label::CuspidalA5
                | Label::T1
                | Label::T2
                | Label::A3Plus
                | Label::A3Minus
                | Label::Dk
        )
    }

    pub fn is_candidate(self) -> bool {
        matches!(self, Label::B3Candidate | Label::H3Candidate | Label::P3Candidate)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Error parsing a [`Label`].
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown label `{0}`")]
pub struct ParseLabelError(pub String);

impl FromStr for Label {
    type Err = ParseLabelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        Label::ALL.iter().copied().find(|l| l.as_str() == t).ok_or_else(|| ParseLabelError(String::from(s)))
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Label {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One evaluated zero test.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Condition {
    /// The tested equation, e.g. `kappa1' = 0`.
    pub predicate: String,
    pub value: f64,
    pub threshold: f64,
    /// Whether `|value| ≤ threshold`.
    pub holds: bool,
}

/// A classification verdict with the conditions that led to it.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SingularityReport {
    pub label: Label,
    pub codimension: Option<u32>,
    pub conditions: Vec<Condition>,
    /// `(s₀, t₀)` when known.
    pub location: Option<(f64, f64)>,
    pub caveats: Vec<String>,
}

impl SingularityReport {
    fn new(label: Label, conditions: Vec<Condition>) -> Self {
        SingularityReport { label, codimension: label.codimension(), conditions, location: None, caveats: Vec::new() }
    }

    pub fn with_location(mut self, s: f64, t: f64) -> Self {
        self.location = Some((s, t));
        self
    }

    fn caveat(mut self, text: &str) -> Self {
        self.caveats.push(String::from(text));
        self
    }
}

/// Classification failures.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ClassificationError {
    #[error("jet of {invariant} needed to order {needed}, available to {available}")]
    InsufficientJetOrder { invariant: &'static str, needed: usize, available: usize },
    #[error("not developable: kappa1 jet has a nonzero entry {kappa1:e}")]
    NotDevelopable { kappa1: f64 },
    #[error("vanishing order of {invariant} exceeds the available jet")]
    OrderUndetectable { invariant: &'static str },
    #[error("degenerate singular point")]
    DegenerateSingularity,
    #[error("not a Legendre immersion at the point: tau0 = {tau0:e}")]
    NotLegendre { tau0: f64 },
    #[error("all four eta-derivatives of lambda vanish")]
    NoVerdict,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// The moduli `b₂` and `h₂`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ModuliCoefficients {
    pub b2: f64,
    pub h2: f64,
}

#[derive(Clone, Copy)]
enum Inv {
    K1,
    T0,
    T1,
}

fn entry(jet: &InvariantJet, which: Inv, k: usize) -> Result<f64, ClassificationError> {
    let (name, v) = match which {
        Inv::K1 => ("kappa1", &jet.kappa1),
        Inv::T0 => ("tau0", &jet.tau0),
        Inv::T1 => ("tau1", &jet.tau1),
    };
    v.get(k).copied().ok_or(ClassificationError::InsufficientJetOrder {
        invariant: name,
        needed: k,
        available: v.len().saturating_sub(1),
    })
}

/// `b₂` as a polynomial in the jets.
pub fn b2(jet: &InvariantJet) -> Result<f64, ClassificationError> {
    Ok(b2_terms(jet)?.iter().sum())
}

fn b2_terms(jet: &InvariantJet) -> Result<[f64; 10], ClassificationError> {
    let g = |w, k| entry(jet, w, k);
    let (t0, dt0, ddt0) = (g(Inv::T0, 0)?, g(Inv::T0, 1)?, g(Inv::T0, 2)?);
    let (t1, dt1, ddt1) = (g(Inv::T1, 0)?, g(Inv::T1, 1)?, g(Inv::T1, 2)?);
    let (k3, k4) = (g(Inv::K1, 3)?, g(Inv::K1, 4)?);
    Ok([
        48.0 * t0 * t0 * t1 * t1 * (t0 * t0 - 2.0),
        -20.0 * t0 * t0 * dt1 * dt1,
        -20.0 * t1 * t1 * dt0 * dt0,
        -56.0 * t0 * t1 * dt0 * dt1,
        -24.0 * t0 * t1 * t0 * ddt1,
        -24.0 * t0 * t1 * t1 * ddt0,
        20.0 * k3 * t0 * dt1,
        20.0 * k3 * t1 * dt0,
        -5.0 * k3 * k3,
        6.0 * k4 * t0 * t1,
    ])
}

/// `h₂` as a polynomial in the jets.
pub fn h2(jet: &InvariantJet) -> Result<f64, ClassificationError> {
    Ok(h2_terms(jet)?.iter().sum())
}

fn h2_terms(jet: &InvariantJet) -> Result<[f64; 12], ClassificationError> {
    let g = |w, k| entry(jet, w, k);
    let (t0, dt0) = (g(Inv::T0, 0)?, g(Inv::T0, 1)?);
    let (dt1, ddt1, d3t1) = (g(Inv::T1, 1)?, g(Inv::T1, 2)?, g(Inv::T1, 3)?);
    let (k2, k3, k4) = (g(Inv::K1, 2)?, g(Inv::K1, 3)?, g(Inv::K1, 4)?);
    Ok([
        -15.0 * t0 * t0 * dt1 * dt1 * dt1,
        -24.0 * dt0 * dt1 * dt1 * k2,
        -36.0 * dt1 * k2 * k2,
        -15.0 * t0 * t0 * dt1 * k2 * k2,
        -24.0 * dt0 * k2 * k2 * k2,
        -21.0 * t0 * dt1 * k2 * ddt1,
        20.0 * t0 * dt1 * dt1 * k3,
        -t0 * k2 * k2 * k3,
        5.0 * k2 * ddt1 * k3,
        -5.0 * dt1 * k3 * k3,
        -4.0 * k2 * k2 * d3t1,
        4.0 * dt1 * k2 * k4,
    ])
}

fn magnitude(terms: &[f64]) -> f64 {
    terms.iter().map(|x| x.abs()).sum()
}

pub fn moduli_coefficients(jet: &InvariantJet) -> Result<ModuliCoefficients, ClassificationError> {
    Ok(ModuliCoefficients { b2: b2(jet)?, h2: h2(jet)? })
}

struct Ctx<'a> {
    jet: &'a InvariantJet,
    tol: f64,
    scale: f64,
    conditions: Vec<Condition>,
}

impl<'a> Ctx<'a> {
    fn new(jet: &'a InvariantJet, tol: f64) -> Self {
        let scale =
            jet.kappa1.iter().chain(&jet.tau0).chain(&jet.tau1).fold(1.0f64, |m, x| m.max(x.abs()));
        Ctx { jet, tol, scale, conditions: Vec::new() }
    }

    fn get(&self, w: Inv, k: usize) -> Result<f64, ClassificationError> {
        entry(self.jet, w, k)
    }

    /// Records and evaluates `text = 0` for a single jet entry.
    fn zero(&mut self, text: &str, value: f64) -> bool {
        let m = self.scale;
        self.zero_rel(text, value, m)
    }

    /// Records and evaluates `text = 0` for a polynomial whose terms have
    /// absolute sum `magnitude`.
    fn zero_rel(&mut self, text: &str, value: f64, magnitude: f64) -> bool {
        let threshold = self.tol * magnitude.max(1.0);
        let holds = value.abs() <= threshold;
        self.conditions.push(Condition { predicate: format!("{text} = 0"), value, threshold, holds });
        holds
    }

    fn done(self, label: Label) -> SingularityReport {
        SingularityReport::new(label, self.conditions)
    }
}

fn signed(positive: bool, plus: Label, minus: Label) -> Label {
    if positive {
        plus
    } else {
        minus
    }
}

const CAVEAT_B3: &str = "b3 is not evaluated; B3 requires b2 = 0 and b3 != 0";
const CAVEAT_H3: &str = "h3 is not evaluated; H3 requires h2 = 0 and h3 != 0";
const CAVEAT_P3: &str = "p4 is not evaluated; P3 requires p4 not in {0, 1/2, 1, 3/2}";
const CAVEAT_CA5: &str = "topological verdict: the germ is topologically A-equivalent to the cA5 normal form";
const CAVEAT_DEVELOPABLE: &str = "kappa1 jet vanishes: classified as a developable surface";

/// Classifies a point of a ruled surface from the invariant jets there.
///
/// A jet with `κ₁` identically zero is classified as a developable surface.
pub fn classify_ruled(jet: &InvariantJet) -> Result<SingularityReport, ClassificationError> {
    classify_ruled_with(jet, TOL_CLS)
}

pub fn classify_ruled_with(jet: &InvariantJet, tol: f64) -> Result<SingularityReport, ClassificationError> {
    if vanishing_order(&jet.kappa1, tol) == Order::Infinite {
        return Ok(classify_developable_with(jet, tol)?.caveat(CAVEAT_DEVELOPABLE));
    }
    let mut c = Ctx::new(jet, tol);
    let k1 = c.get(Inv::K1, 0)?;
    if !c.zero("kappa1", k1) {
        return Ok(c.done(Label::Immersion));
    }
    let dk1 = c.get(Inv::K1, 1)?;
    if !c.zero("kappa1'", dk1) {
        return Ok(c.done(Label::S0));
    }
    let (t0, t1) = (c.get(Inv::T0, 0)?, c.get(Inv::T1, 0)?);
    let k2 = c.get(Inv::K1, 2)?;
    if !c.zero("tau1", t1) {
        let q = k2 * (k2 - 2.0 * t0 * t1);
        if !c.zero_rel("kappa1''(kappa1'' - 2 tau0 tau1)", q, k2.abs() * (k2.abs() + 2.0 * (t0 * t1).abs())) {
            return Ok(c.done(signed(q > 0.0, Label::S1Plus, Label::S1Minus)));
        }
        if c.zero("kappa1''", k2) {
            if !c.zero("tau0", t0) {
                return s_branch(c, t0 * t1);
            }
            return c_branch(c, t1);
        }
        // κ₁'' = 2τ₀τ₁ ≠ 0
        let terms = b2_terms(jet)?;
        let b: f64 = terms.iter().sum();
        if !c.zero_rel("b2", b, magnitude(&terms)) {
            return Ok(c.done(signed(b > 0.0, Label::B2Plus, Label::B2Minus)));
        }
        return Ok(c.done(Label::B3Candidate).caveat(CAVEAT_B3));
    }
    if !c.zero("kappa1''", k2) {
        let terms = h2_terms(jet)?;
        if !c.zero_rel("h2", terms.iter().sum(), magnitude(&terms)) {
            return Ok(c.done(Label::H2));
        }
        return Ok(c.done(Label::H3Candidate).caveat(CAVEAT_H3));
    }
    let dt1 = c.get(Inv::T1, 1)?;
    if !c.zero_rel("tau0 tau1'", t0 * dt1, c.scale * c.scale) {
        return Ok(c.done(Label::P3Candidate).caveat(CAVEAT_P3));
    }
    Ok(c.done(Label::Unresolved))
}

/// `κ₁ = κ₁' = κ₁'' = 0`, `τ₀τ₁ ≠ 0`: `S_k` by the first nonzero `κ₁⁽ᵏ⁺¹⁾`.
fn s_branch(mut c: Ctx<'_>, t0t1: f64) -> Result<SingularityReport, ClassificationError> {
    let k3 = c.get(Inv::K1, 3)?;
    if !c.zero("kappa1^(3)", k3) {
        return Ok(c.done(Label::S2));
    }
    let k4 = c.get(Inv::K1, 4)?;
    if !c.zero("kappa1^(4)", k4) {
        return Ok(c.done(signed(k4 * t0t1 < 0.0, Label::S3Plus, Label::S3Minus)));
    }
    let k5 = c.get(Inv::K1, 5)?;
    if !c.zero("kappa1^(5)", k5) {
        return Ok(c.done(signed(k5 * t0t1 < 0.0, Label::S4Plus, Label::S4Minus)));
    }
    Ok(c.done(Label::Unresolved))
}

/// `κ₁ = κ₁' = κ₁'' = τ₀ = 0`, `τ₁ ≠ 0`.
fn c_branch(mut c: Ctx<'_>, t1: f64) -> Result<SingularityReport, ClassificationError> {
    let k3 = c.get(Inv::K1, 3)?;
    let dt0 = c.get(Inv::T0, 1)?;
    let q = k3 * (k3 - 2.0 * dt0 * t1);
    if !c.zero_rel("kappa1^(3)(kappa1^(3) - 2 tau0' tau1)", q, k3.abs() * (k3.abs() + 2.0 * (dt0 * t1).abs())) {
        return Ok(c.done(signed(q > 0.0, Label::C3Plus, Label::C3Minus)));
    }
    if c.zero("kappa1^(3)", k3) {
        if c.zero("tau0'", dt0) {
            return Ok(c.done(Label::Unresolved));
        }
        let k4 = c.get(Inv::K1, 4)?;
        if !c.zero("kappa1^(4)", k4) {
            return Ok(c.done(signed(k4 * dt0 * t1 < 0.0, Label::C4Plus, Label::C4Minus)));
        }
        let k5 = c.get(Inv::K1, 5)?;
        if !c.zero("kappa1^(5)", k5) {
            return Ok(c.done(signed(k5 * dt0 * t1 < 0.0, Label::C5Plus, Label::C5Minus)));
        }
        return Ok(c.done(Label::Unresolved));
    }
    // κ₁⁽³⁾ = 2τ₁τ₀' ≠ 0
    let k4 = c.get(Inv::K1, 4)?;
    let (dt1, ddt0) = (c.get(Inv::T1, 1)?, c.get(Inv::T0, 2)?);
    let f = 3.0 * k4 - 8.0 * dt0 * dt1 - 12.0 * t1 * ddt0;
    let mag = 3.0 * k4.abs() + 8.0 * (dt0 * dt1).abs() + 12.0 * (t1 * ddt0).abs();
    if !c.zero_rel("3 kappa1^(4) - 8 tau0' tau1' - 12 tau1 tau0''", f, mag) {
        return Ok(c.done(Label::F4));
    }
    Ok(c.done(Label::Unresolved))
}

/// Classifies a point of the singular curve of a developable surface.
pub fn classify_developable(jet: &InvariantJet) -> Result<SingularityReport, ClassificationError> {
    classify_developable_with(jet, TOL_CLS)
}

pub fn classify_developable_with(jet: &InvariantJet, tol: f64) -> Result<SingularityReport, ClassificationError> {
    if let Order::Finite(k) = vanishing_order(&jet.kappa1, tol) {
        return Err(ClassificationError::NotDevelopable { kappa1: jet.kappa1[k] });
    }
    let mut c = Ctx::new(jet, tol);
    let (t0, t1) = (c.get(Inv::T0, 0)?, c.get(Inv::T1, 0)?);
    let t0_zero = c.zero("tau0", t0);
    let t1_zero = c.zero("tau1", t1);
    if !t1_zero {
        if !t0_zero {
            return Ok(c.done(Label::CuspidalEdge));
        }
        let labels = [Label::CuspidalCrosscap, Label::CuspidalS1Plus, Label::CuspidalC3Plus];
        for (k, label) in (1..=3).zip(labels) {
            let d = c.get(Inv::T0, k)?;
            if !c.zero(&derivative_name("tau0", k), d) {
                return Ok(c.done(label));
            }
        }
        return Ok(c.done(Label::Unresolved));
    }
    if !t0_zero {
        let labels = [Label::Swallowtail, Label::CuspidalA4, Label::CuspidalA5];
        for (k, label) in (1..=3).zip(labels) {
            let d = c.get(Inv::T1, k)?;
            if !c.zero(&derivative_name("tau1", k), d) {
                let r = c.done(label);
                return Ok(if label == Label::CuspidalA5 { r.caveat(CAVEAT_CA5) } else { r });
            }
        }
        return Ok(c.done(Label::Unresolved));
    }
    let dt1 = c.get(Inv::T1, 1)?;
    if !c.zero("tau1'", dt1) {
        return Ok(c.done(Label::T1));
    }
    Ok(c.done(Label::T2))
}

fn derivative_name(base: &str, k: usize) -> String {
    match k {
        0 => String::from(base),
        1 => format!("{base}'"),
        2 => format!("{base}''"),
        _ => format!("{base}^({k})"),
    }
}

/// How much of the A-type a curve type fixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Determinativity {
    Smooth,
    Topological,
    Neither,
}

/// Curve type `(m, m+ℓ, m+ℓ+r)` of the striction curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurveType {
    pub m: usize,
    pub l: usize,
    pub r: usize,
    pub determinativity: Determinativity,
}

impl CurveType {
    pub fn new(m: usize, l: usize, r: usize) -> Self {
        let smooth = (m == 1 && l == 1) || (m, l, r) == (2, 1, 1) || (m, l, r) == (3, 1, 1);
        let determinativity = if smooth {
            Determinativity::Smooth
        } else if !(l % 2 == 0 && r % 2 == 0) || m == 1 {
            Determinativity::Topological
        } else {
            Determinativity::Neither
        };
        CurveType { m, l, r, determinativity }
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.m, self.m + self.l, self.m + self.l + self.r)
    }
}

/// Curve type of the striction curve of a developable from the orders of
/// `τ₁` and `τ₀`.
pub fn topological_type(jet: &InvariantJet) -> Result<CurveType, ClassificationError> {
    topological_type_with(jet, TOL_CLS)
}

pub fn topological_type_with(jet: &InvariantJet, tol: f64) -> Result<CurveType, ClassificationError> {
    if let Order::Finite(k) = vanishing_order(&jet.kappa1, tol) {
        return Err(ClassificationError::NotDevelopable { kappa1: jet.kappa1[k] });
    }
    let scale = jet.tau0.iter().chain(&jet.tau1).fold(1.0f64, |m, x| m.max(x.abs()));
    let order = |v: &[f64], name| match v.iter().position(|x| x.abs() > tol * scale) {
        Some(k) => Ok(k),
        None => Err(ClassificationError::OrderUndetectable { invariant: name }),
    };
    let m = order(&jet.tau1, "tau1")? + 1;
    let r = order(&jet.tau0, "tau0")? + 1;
    Ok(CurveType::new(m, 1, r))
}

/// The label selected by the first nonvanishing `ηᵏλ`, `k = 1..4`.
pub fn izumiya_saji_label(eta: [f64; 4], tol: f64) -> Result<Label, ClassificationError> {
    let scale = eta.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let labels = [Label::CuspidalEdge, Label::Swallowtail, Label::CuspidalA4, Label::CuspidalA5];
    eta.iter()
        .position(|x| x.abs() > tol * scale)
        .map(|k| labels[k])
        .ok_or(ClassificationError::NoVerdict)
}

/// Classifies the singular point on the ruling at `s0` of a developable
/// front by the iterated derivatives of `λ` along the null direction.
pub fn izumiya_saji_classify<C: RuledCurve>(
    fd: &FrontalData<C>,
    s0: f64,
) -> Result<(Label, [f64; 4]), ClassificationError> {
    let jet = crate::geometry::invariant_jet(fd.curve(), s0, 0)?;
    let tau0 = jet.tau0[0];
    if tau0.abs() <= TOL_CLS * (1.0 + jet.tau1[0].abs()) {
        return Err(ClassificationError::NotLegendre { tau0 });
    }
    let eta = fd.eta_lambda(s0).map_err(|e| match e {
        GeometryError::DegenerateDirector { .. } => ClassificationError::DegenerateSingularity,
        other => ClassificationError::Geometry(other),
    })?;
    Ok((izumiya_saji_label(eta, TOL_CLS)?, eta))
}
