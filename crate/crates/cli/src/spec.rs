//! Surface specification files.
//!
//! A spec is a TOML document with exactly one source section:
//!
//! ```toml
//! [domain]
//! start = -1.0
//! end = 1.0
//!
//! [builtin]
//! name = "helicoid"   # helicoid | helix-tangent-developable | cone | gallery:<label>
//! pitch = 0.5
//! ```
//!
//! or `[polynomial]` (`r`, `e` as three coefficient lists each, optional
//! `form = "lines"` to read them as `v₀`, `v₁`), `[prescription]`
//! (coefficient lists of `kappa0`, `kappa1`, `tau0`, `tau1` in the parameter
//! and an optional `step`), or `[jets]` (derivatives of `kappa1`, `tau0`,
//! `tau1` at `s = 0`). Optional top-level keys: `samples`; optional
//! sections: `[init]` (initial frame for prescriptions), `[compare]` (a
//! builtin to align reconstructions against).

use serde::{Deserialize, Serialize};

use ruledkit_core::algebra::{DualVector, UnitDualVector, Vec3};
use ruledkit_core::classification::Label;
use ruledkit_core::curve::{builtin, PolynomialCurve};
use ruledkit_core::geometry::DualFrame;
use ruledkit_core::reconstruction::{
    gallery, integrate_frenet, truncated_polynomial_surface, InvariantPrescription, Invariant, JetPrescription,
    DEFAULT_STEP, GALLERY_DOMAIN,
};
use ruledkit_core::{Interval, Polynomial, RuledCurve};

use crate::error::CliError;

/// Default number of samples for locus and invariant scans.
pub const DEFAULT_SAMPLES: usize = 401;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain: Option<DomainSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub builtin: Option<BuiltinSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<PolynomialSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prescription: Option<PrescriptionSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jets: Option<JetSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub init: Option<FrameSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub compare: Option<BuiltinSection>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainSection {
    pub start: f64,
    pub end: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuiltinSection {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pitch: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apex: Option<[f64; 3]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialSection {
    pub r: [Vec<f64>; 3],
    pub e: [Vec<f64>; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrescriptionSection {
    #[serde(default = "one")]
    pub kappa0: Vec<f64>,
    #[serde(default)]
    pub kappa1: Vec<f64>,
    #[serde(default)]
    pub tau0: Vec<f64>,
    #[serde(default)]
    pub tau1: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<f64>,
}

fn one() -> Vec<f64> {
    vec![1.0]
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JetSection {
    #[serde(default)]
    pub kappa1: Vec<f64>,
    #[serde(default)]
    pub tau0: Vec<f64>,
    #[serde(default)]
    pub tau1: Vec<f64>,
}

/// A dual frame as three lines, each `[dx, dy, dz, mx, my, mz]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameSection {
    pub v: [f64; 6],
    pub n: [f64; 6],
    pub t: [f64; 6],
}

impl FrameSection {
    pub fn from_frame(f: &DualFrame) -> Self {
        let row = |l: UnitDualVector| {
            let (d, m) = (l.direction(), l.moment());
            [d.x, d.y, d.z, m.x, m.y, m.z]
        };
        FrameSection { v: row(f.v), n: row(f.n), t: row(f.t) }
    }

    pub fn to_frame(&self) -> DualFrame {
        let dv = |a: &[f64; 6]| DualVector::new(Vec3::new(a[0], a[1], a[2]), Vec3::new(a[3], a[4], a[5]));
        DualFrame::from_rows([dv(&self.v), dv(&self.n), dv(&self.t)])
    }
}

/// A named closed-form surface.
#[derive(Clone, Debug, PartialEq)]
pub enum Builtin {
    Helicoid { pitch: f64 },
    HelixTangentDevelopable { radius: f64, pitch: f64 },
    Cone { apex: Vec3, alpha: f64 },
    Gallery(Label),
}

impl Builtin {
    fn parse(b: &BuiltinSection) -> Result<Self, CliError> {
        let name = b.name.as_str();
        let unused = |keys: &[(&str, bool)]| -> Result<(), CliError> {
            match keys.iter().find(|(_, set)| *set) {
                Some((k, _)) => Err(CliError::input(format!("[builtin] key `{k}` does not apply to `{name}`"))),
                None => Ok(()),
            }
        };
        let out = match name {
            "helicoid" => {
                unused(&[("radius", b.radius.is_some()), ("alpha", b.alpha.is_some()), ("apex", b.apex.is_some())])?;
                Builtin::Helicoid { pitch: b.pitch.unwrap_or(1.0) }
            }
            "helix-tangent-developable" => {
                unused(&[("alpha", b.alpha.is_some()), ("apex", b.apex.is_some())])?;
                let radius = b.radius.unwrap_or(1.0);
                if !(radius > 0.0) {
                    return Err(CliError::input("[builtin] radius must be positive"));
                }
                Builtin::HelixTangentDevelopable { radius, pitch: b.pitch.unwrap_or(0.5) }
            }
            "cone" => {
                unused(&[("pitch", b.pitch.is_some()), ("radius", b.radius.is_some())])?;
                let alpha = b.alpha.unwrap_or(core::f64::consts::FRAC_PI_6);
                if !(alpha > 0.0 && alpha < core::f64::consts::FRAC_PI_2) {
                    return Err(CliError::input("[builtin] cone alpha must lie in (0, pi/2)"));
                }
                Builtin::Cone { apex: Vec3::from_array(b.apex.unwrap_or([0.0; 3])), alpha }
            }
            _ => match name.strip_prefix("gallery:") {
                Some(label) => {
                    unused(&[
                        ("pitch", b.pitch.is_some()),
                        ("radius", b.radius.is_some()),
                        ("alpha", b.alpha.is_some()),
                        ("apex", b.apex.is_some()),
                    ])?;
                    Builtin::Gallery(label.parse().map_err(|e| CliError::input(format!("[builtin] {e}")))?)
                }
                None => return Err(CliError::input(format!("[builtin] unknown surface `{name}`"))),
            },
        };
        Ok(out)
    }

    pub fn name(&self) -> String {
        match self {
            Builtin::Helicoid { .. } => "helicoid".into(),
            Builtin::HelixTangentDevelopable { .. } => "helix-tangent-developable".into(),
            Builtin::Cone { .. } => "cone".into(),
            Builtin::Gallery(l) => format!("gallery:{l}"),
        }
    }

    pub fn build(&self, domain: Interval) -> Result<Box<dyn RuledCurve>, CliError> {
        Ok(match *self {
            Builtin::Helicoid { pitch } => Box::new(builtin::helicoid(pitch, domain)),
            Builtin::HelixTangentDevelopable { radius, pitch } => {
                Box::new(builtin::helix_tangent_developable(radius, pitch, domain))
            }
            Builtin::Cone { apex, alpha } => Box::new(builtin::cone(apex, alpha, domain)),
            Builtin::Gallery(label) => Box::new(gallery(label)?.curve.with_domain(domain)),
        })
    }
}

/// Where the surface comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Builtin(Builtin),
    Polynomial(PolynomialCurve),
    Prescription { prescription: InvariantPrescription, step: f64, init: DualFrame },
    Jets(JetPrescription),
}

/// A validated surface specification.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceSpec {
    pub source: Source,
    pub domain: Interval,
    pub samples: usize,
    pub compare: Option<Builtin>,
}

fn parse_domain(d: Option<DomainSection>, default: Option<Interval>) -> Result<Interval, CliError> {
    let domain = match (d, default) {
        (Some(d), _) => Interval::new(d.start, d.end),
        (None, Some(i)) => i,
        (None, None) => return Err(CliError::input("missing [domain] section")),
    };
    if !(domain.start.is_finite() && domain.end.is_finite() && domain.start < domain.end) {
        return Err(CliError::input(format!("[domain] is empty: start = {}, end = {}", domain.start, domain.end)));
    }
    Ok(domain)
}

fn polys(c: &[Vec<f64>; 3]) -> [Polynomial; 3] {
    [Polynomial::new(c[0].clone()), Polynomial::new(c[1].clone()), Polynomial::new(c[2].clone())]
}

impl SurfaceSpec {
    /// Parses and validates spec text. TOML syntax errors carry line and
    /// column.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: SpecFile = toml::from_str(text).map_err(|e| CliError::input(format!("spec: {e}")))?;
        Self::from_file(file)
    }

    pub fn from_file(file: SpecFile) -> Result<Self, CliError> {
        let present = [
            file.builtin.is_some(),
            file.polynomial.is_some(),
            file.prescription.is_some(),
            file.jets.is_some(),
        ];
        match present.iter().filter(|p| **p).count() {
            1 => {}
            0 => return Err(CliError::input("spec needs one of [builtin], [polynomial], [prescription], [jets]")),
            _ => return Err(CliError::input("spec has more than one source section")),
        }
        if file.init.is_some() && file.prescription.is_none() {
            return Err(CliError::input("[init] only applies to [prescription] sources"));
        }
        let samples = file.samples.unwrap_or(DEFAULT_SAMPLES);
        if samples < 3 {
            return Err(CliError::input("samples must be at least 3"));
        }
        let (source, domain) = if let Some(b) = &file.builtin {
            let b = Builtin::parse(b)?;
            let default = matches!(b, Builtin::Gallery(_)).then_some(GALLERY_DOMAIN);
            (Source::Builtin(b), parse_domain(file.domain, default)?)
        } else if let Some(p) = &file.polynomial {
            let domain = parse_domain(file.domain, None)?;
            let curve = match p.form.as_deref() {
                None | Some("base-director") => PolynomialCurve::from_base_director(domain, polys(&p.r), polys(&p.e)),
                Some("lines") => PolynomialCurve::from_lines(domain, polys(&p.r), polys(&p.e)),
                Some(other) => {
                    return Err(CliError::input(format!(
                        "[polynomial] form must be `base-director` or `lines`, got `{other}`"
                    )))
                }
            };
            (Source::Polynomial(curve), domain)
        } else if let Some(p) = &file.prescription {
            let domain = parse_domain(file.domain, None)?;
            let step = p.step.unwrap_or(DEFAULT_STEP);
            if !(step > 0.0 && step.is_finite()) {
                return Err(CliError::input("[prescription] step must be positive"));
            }
            let prescription = InvariantPrescription {
                domain,
                kappa0: Polynomial::new(p.kappa0.clone()),
                kappa1: Polynomial::new(p.kappa1.clone()),
                tau0: Polynomial::new(p.tau0.clone()),
                tau1: Polynomial::new(p.tau1.clone()),
            };
            let init = file.init.as_ref().map(FrameSection::to_frame).unwrap_or(DualFrame::IDENTITY);
            (Source::Prescription { prescription, step, init }, domain)
        } else {
            let j = file.jets.clone().unwrap_or_default();
            let domain = parse_domain(file.domain, Some(GALLERY_DOMAIN))?;
            (Source::Jets(JetPrescription::new(&j.kappa1, &j.tau0, &j.tau1)), domain)
        };
        let compare = file.compare.as_ref().map(Builtin::parse).transpose()?;
        Ok(SurfaceSpec { source, domain, samples, compare })
    }

    /// Short description of the source.
    pub fn source_name(&self) -> String {
        match &self.source {
            Source::Builtin(b) => format!("builtin:{}", b.name()),
            Source::Polynomial(_) => "polynomial".into(),
            Source::Prescription { .. } => "prescription".into(),
            Source::Jets(_) => "jets".into(),
        }
    }

    /// The surface, with `κ₁` shifted by `lambda` when given. Only
    /// prescription, jet and gallery sources accept a shift.
    pub fn build(&self, lambda: Option<f64>) -> Result<Box<dyn RuledCurve>, CliError> {
        let lambda = lambda.filter(|l| *l != 0.0);
        match (&self.source, lambda) {
            (Source::Builtin(Builtin::Gallery(label)), Some(l)) => {
                let p = gallery(*label)?.prescription.perturbed(Invariant::Kappa1, 0, l);
                Ok(Box::new(truncated_polynomial_surface(&p, self.domain)))
            }
            (Source::Jets(j), l) => {
                let p = j.perturbed(Invariant::Kappa1, 0, l.unwrap_or(0.0));
                Ok(Box::new(truncated_polynomial_surface(&p, self.domain)))
            }
            (Source::Prescription { prescription, step, init }, l) => {
                let mut p = prescription.clone();
                if let Some(l) = l {
                    p.kappa1 = p.kappa1.add(&Polynomial::constant(l));
                }
                Ok(Box::new(integrate_frenet(&p, init, *step)?))
            }
            (_, Some(_)) => Err(CliError::input(
                "--lambda applies only to [prescription], [jets] and gallery sources",
            )),
            (Source::Builtin(b), None) => b.build(self.domain),
            (Source::Polynomial(c), None) => Ok(Box::new(c.clone())),
        }
    }
}
