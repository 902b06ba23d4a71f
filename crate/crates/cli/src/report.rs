//! The `analyze` report.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use ruledkit_core::classification::{classify_ruled_with, izumiya_saji_classify, topological_type_with, CurveType, Label, SingularityReport};
use ruledkit_core::geometry::{
    invariant_jet, is_developable, max_abs_kappa1, singular_locus, striction_at, FrontalData, LocusOptions, SingularLocus,
    DEVELOPABLE_SAMPLES,
};
use ruledkit_core::numeric::{brent, golden_min};
use ruledkit_core::tolerance::{CYL_FLOOR, DEV_TOL, TOL_CLS, TOL_UNIT};
use ruledkit_core::{Interval, RuledCurve, Vec3};

use crate::error::CliError;
use crate::spec::SurfaceSpec;

pub const SCHEMA_VERSION: u32 = 1;

/// Default jet order used for classification.
pub const DEFAULT_ORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalysisOptions {
    pub tol: f64,
    pub order: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { tol: TOL_CLS, order: DEFAULT_ORDER }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub classification: f64,
    pub developable: f64,
    pub unit: f64,
    pub cylindrical_floor: f64,
    pub jet_order: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub spec_sha256: String,
    pub tool: String,
    pub version: String,
    pub tolerances: Tolerances,
}

/// Range and zeros of one invariant over the sample grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub min: f64,
    pub max: f64,
    pub zeros: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Invariants {
    pub kappa1: InvariantSummary,
    pub tau0: InvariantSummary,
    pub tau1: InvariantSummary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocusKind {
    Empty,
    Isolated,
    /// Developable: one singular point on every ruling.
    Curve,
}

/// One analyzed point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointAnalysis {
    pub s: f64,
    pub t: f64,
    pub point: Vec3,
    pub report: Option<SingularityReport>,
    /// Classification failure, when `report` is absent.
    pub error: Option<String>,
    pub curve_type: Option<CurveType>,
    /// Cross-check by iterated derivatives of the singularity function.
    pub izumiya_saji: Option<Label>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub provenance: Provenance,
    pub source: String,
    pub domain: Interval,
    pub developable: bool,
    pub max_abs_kappa1: f64,
    pub invariants: Invariants,
    pub singular_locus: LocusKind,
    pub points: Vec<PointAnalysis>,
}

impl AnalysisReport {
    /// Whether any point is unresolved or failed to classify.
    pub fn has_unresolved(&self) -> bool {
        self.points.iter().any(|p| p.report.as_ref().map_or(true, |r| r.label == Label::Unresolved))
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Zeros of `f` on `domain`: sign changes between samples refined by
/// Brent's method, and touching zeros at local minima of `|f|` refined by
/// golden-section search.
pub fn zeros_of(mut f: impl FnMut(f64) -> f64, domain: Interval, samples: usize, scale: f64) -> Vec<f64> {
    let xs: Vec<f64> = domain.linspace(samples).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let tol = 1e-9 * scale.max(1.0);
    let mut out = Vec::new();
    for i in 0..xs.len() {
        if ys[i] == 0.0 {
            out.push(xs[i]);
        }
        if i + 1 < xs.len() && ys[i] * ys[i + 1] < 0.0 {
            if let Some(x) = brent(&mut f, xs[i], xs[i + 1], 1e-13, 200) {
                out.push(x);
            }
        }
        if i > 0 && i + 1 < xs.len() && ys[i].abs() <= ys[i - 1].abs() && ys[i].abs() <= ys[i + 1].abs() {
            let same_sign = ys[i - 1] * ys[i] > 0.0 && ys[i] * ys[i + 1] > 0.0;
            if same_sign && ys[i].abs() < 1e-2 * scale.max(1.0) {
                let x = golden_min(|x| f(x).abs(), xs[i - 1], xs[i + 1], 1e-12);
                if f(x).abs() <= tol {
                    out.push(x);
                }
            }
        }
    }
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| (*a - *b).abs() < 1e-8);
    out
}

fn summarize(values: &[f64], zeros: Vec<f64>) -> InvariantSummary {
    InvariantSummary {
        min: values.iter().copied().fold(f64::INFINITY, f64::min),
        max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        zeros,
    }
}

fn analyze_point(c: &dyn RuledCurve, s: f64, developable: bool, opts: &AnalysisOptions) -> Result<PointAnalysis, CliError> {
    let sp = striction_at(&c, s)?;
    let mut out = PointAnalysis {
        s,
        t: sp.t,
        point: sp.point,
        report: None,
        error: None,
        curve_type: None,
        izumiya_saji: None,
    };
    let jet = match invariant_jet(&c, s, opts.order) {
        Ok(j) => j,
        Err(e) => {
            out.error = Some(e.to_string());
            return Ok(out);
        }
    };
    match classify_ruled_with(&jet, opts.tol) {
        Ok(r) => out.report = Some(r.with_location(s, sp.t)),
        Err(e) => out.error = Some(e.to_string()),
    }
    if developable {
        out.curve_type = topological_type_with(&jet, opts.tol).ok();
        if let Ok(fd) = FrontalData::new(c) {
            out.izumiya_saji = izumiya_saji_classify(&fd, s).ok().map(|(l, _)| l);
        }
    }
    Ok(out)
}

/// Runs the full analysis of a spec. `spec_bytes` feeds the provenance hash.
pub fn analyze(spec: &SurfaceSpec, spec_bytes: &[u8], opts: &AnalysisOptions) -> Result<AnalysisReport, CliError> {
    let c = spec.build(None)?;
    let c: &dyn RuledCurve = &*c;
    let domain = c.domain();
    let max_k1 = max_abs_kappa1(&c, DEVELOPABLE_SAMPLES)?;
    let developable = is_developable(&c, DEV_TOL)?;

    let xs: Vec<f64> = domain.linspace(spec.samples).collect();
    let mut vals = [Vec::new(), Vec::new(), Vec::new()];
    for &s in &xs {
        let j = invariant_jet(&c, s, 0)?;
        vals[0].push(j.kappa1[0]);
        vals[1].push(j.tau0[0]);
        vals[2].push(j.tau1[0]);
    }
    let scale = |v: &[f64]| v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let invariant = |k: usize| {
        if scale(&vals[k]) <= 1e-12 {
            // identically zero: no isolated zeros to report
            return summarize(&vals[k], Vec::new());
        }
        let z = zeros_of(
            |s| invariant_jet(&c, s, 0).map(|j| [j.kappa1[0], j.tau0[0], j.tau1[0]][k]).unwrap_or(f64::NAN),
            domain,
            spec.samples,
            scale(&vals[k]),
        );
        summarize(&vals[k], z)
    };
    let invariants = Invariants { kappa1: invariant(0), tau0: invariant(1), tau1: invariant(2) };

    let (kind, sites): (LocusKind, Vec<f64>) = if developable {
        let mut sites: Vec<f64> = invariants.tau0.zeros.iter().chain(&invariants.tau1.zeros).copied().collect();
        sites.sort_by(f64::total_cmp);
        sites.dedup_by(|a, b| (*a - *b).abs() < 1e-8);
        if sites.is_empty() {
            sites.push(0.5 * (domain.start + domain.end));
        }
        (LocusKind::Curve, sites)
    } else {
        let lopts = LocusOptions { samples: spec.samples, ..LocusOptions::default() };
        match singular_locus(&c, &lopts)? {
            SingularLocus::Isolated(p) if p.is_empty() => (LocusKind::Empty, Vec::new()),
            SingularLocus::Isolated(p) => (LocusKind::Isolated, p.iter().map(|q| q.s).collect()),
            SingularLocus::Curve { .. } => (LocusKind::Curve, Vec::new()),
        }
    };
    let points = sites
        .into_iter()
        .map(|s| analyze_point(c, s, developable, opts))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        provenance: Provenance {
            spec_sha256: sha256_hex(spec_bytes),
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            tolerances: Tolerances {
                classification: opts.tol,
                developable: DEV_TOL,
                unit: TOL_UNIT,
                cylindrical_floor: CYL_FLOOR,
                jet_order: opts.order,
            },
        },
        source: spec.source_name(),
        domain,
        developable,
        max_abs_kappa1: max_k1,
        invariants,
        singular_locus: kind,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> AnalysisReport {
        let spec = SurfaceSpec::parse(text).unwrap();
        analyze(&spec, text.as_bytes(), &AnalysisOptions::default()).unwrap()
    }

    #[test]
    fn helicoid_is_regular() {
        let r = run("[domain]\nstart = -1.0\nend = 1.0\n[builtin]\nname = \"helicoid\"\npitch = 0.5\n");
        assert!(!r.developable);
        assert_eq!(r.singular_locus, LocusKind::Empty);
        assert!(r.points.is_empty());
        assert!((r.invariants.kappa1.min - 0.5).abs() < 1e-9);
    }

    #[test]
    fn gallery_s0_has_one_crosscap() {
        let r = run("[builtin]\nname = \"gallery:S0\"\n");
        assert_eq!(r.singular_locus, LocusKind::Isolated);
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].report.as_ref().unwrap().label, Label::S0);
        assert!(!r.has_unresolved());
    }

    #[test]
    fn swallowtail_site_is_found() {
        let r = run("[builtin]\nname = \"gallery:Sw\"\n");
        assert!(r.developable);
        let p = r.points.iter().find(|p| p.s.abs() < 1e-8).unwrap();
        assert_eq!(p.report.as_ref().unwrap().label, Label::Swallowtail);
        assert_eq!(p.izumiya_saji, Some(Label::Swallowtail));
        assert_eq!(p.curve_type.unwrap().triple(), (2, 3, 4));
    }

    #[test]
    fn touching_zero_is_found() {
        let z = zeros_of(|x| (x - 0.3) * (x - 0.3), Interval::new(-1.0, 1.0), 101, 1.0);
        assert_eq!(z.len(), 1);
        assert!((z[0] - 0.3).abs() < 1e-5);
    }
}
