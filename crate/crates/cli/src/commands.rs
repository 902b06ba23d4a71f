//! `reconstruct` and `gallery`.

use std::fmt::Write as _;

use ruledkit_core::align::{align_points, RigidAlignment};
use ruledkit_core::classification::Label;
use ruledkit_core::geometry::{invariant_jet, is_developable, striction_at, DualFrame};
use ruledkit_core::reconstruction::{gallery, integrate_frenet, ReconstructedCurve, GALLERY_DOMAIN};
use ruledkit_core::tolerance::DEV_TOL;
use ruledkit_core::{RuledCurve, Vec3};

use crate::error::CliError;
use crate::mesh;
use crate::spec::{DomainSection, FrameSection, JetSection, PrescriptionSection, Source, SpecFile, SurfaceSpec};

/// Files and figures produced by `reconstruct`.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub curve: ReconstructedCurve,
    pub csv: String,
    pub obj: String,
    pub spec: String,
    pub developable: bool,
    pub alignment: Option<RigidAlignment>,
}

/// CSV of the striction curve and measured invariants at every node.
pub fn curve_csv(c: &ReconstructedCurve) -> Result<String, CliError> {
    let mut out = String::from("s,x,y,z,kappa1,tau0,tau1\n");
    for &s in c.nodes() {
        let p = striction_at(c, s)?.point;
        let j = invariant_jet(c, s, 0)?;
        let _ = writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            s, p.x, p.y, p.z, j.kappa1[0], j.tau0[0], j.tau1[0]
        );
    }
    Ok(out)
}

/// Points `σ(s) + t e(s)` on a grid. Measuring `t` from the striction
/// point keeps the correspondence between congruent surfaces.
pub fn striction_grid(c: &dyn RuledCurve, ns: usize, ts: &[f64]) -> Result<Vec<Vec3>, CliError> {
    let mut out = Vec::with_capacity(ns * ts.len());
    for s in c.domain().linspace(ns) {
        let sigma = striction_at(&c, s)?.point;
        let e = c.line(s)?.direction();
        for &t in ts {
            out.push(sigma + e * t);
        }
    }
    Ok(out)
}

/// Integrates the prescription of `spec` from `init` with step `step`,
/// producing the CSV, OBJ (on an `ns × nt` grid over `t_range`) and a spec
/// that reproduces the run.
pub fn reconstruct(
    spec: &SurfaceSpec,
    init: Option<DualFrame>,
    step: f64,
    grid: (usize, usize),
    t_range: (f64, f64),
) -> Result<Reconstruction, CliError> {
    let Source::Prescription { prescription, init: spec_init, .. } = &spec.source else {
        return Err(CliError::input("reconstruct needs a spec with a [prescription] section"));
    };
    if !(step > 0.0 && step.is_finite()) {
        return Err(CliError::input(format!("--step must be positive, got {step}")));
    }
    let init = init.unwrap_or(*spec_init);
    let curve = integrate_frenet(prescription, &init, step)?;
    let csv = curve_csv(&curve)?;
    let obj = mesh::build(&curve, grid.0, grid.1, t_range)?.to_obj();
    let developable = is_developable(&curve, DEV_TOL)?;

    let alignment = match &spec.compare {
        Some(b) => {
            let reference = b.build(spec.domain)?;
            let ts: Vec<f64> = (0..grid.1.max(2))
                .map(|j| t_range.0 + (t_range.1 - t_range.0) * j as f64 / (grid.1.max(2) - 1) as f64)
                .collect();
            let ns = grid.0.max(2);
            let src = striction_grid(&curve, ns, &ts)?;
            let dst = striction_grid(&*reference, ns, &ts)?;
            align_points(&src, &dst)
        }
        None => None,
    };

    let p = prescription;
    let file = SpecFile {
        domain: Some(DomainSection { start: spec.domain.start, end: spec.domain.end }),
        prescription: Some(PrescriptionSection {
            kappa0: p.kappa0.coeffs.clone(),
            kappa1: p.kappa1.coeffs.clone(),
            tau0: p.tau0.coeffs.clone(),
            tau1: p.tau1.coeffs.clone(),
            step: Some(step),
        }),
        init: (init != DualFrame::IDENTITY).then(|| FrameSection::from_frame(&init)),
        ..SpecFile::default()
    };
    let spec_text = toml::to_string(&file).map_err(|e| CliError::input(format!("spec output: {e}")))?;
    Ok(Reconstruction { curve, csv, obj, spec: spec_text, developable, alignment })
}

/// A spec file re-creating the gallery surface of `label`.
pub fn gallery_spec(label: Label) -> Result<String, CliError> {
    let g = gallery(label)?;
    let file = SpecFile {
        domain: Some(DomainSection { start: GALLERY_DOMAIN.start, end: GALLERY_DOMAIN.end }),
        jets: Some(JetSection {
            kappa1: g.prescription.kappa1.clone(),
            tau0: g.prescription.tau0.clone(),
            tau1: g.prescription.tau1.clone(),
        }),
        ..SpecFile::default()
    };
    let body = toml::to_string(&file).map_err(|e| CliError::input(format!("spec output: {e}")))?;
    Ok(format!("# gallery surface of type {label} at s = 0\n{body}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{analyze, AnalysisOptions};

    #[test]
    fn gallery_spec_reproduces_label() {
        for label in [Label::S0, Label::CuspidalEdge, Label::S1Minus] {
            let text = gallery_spec(label).unwrap();
            let spec = SurfaceSpec::parse(&text).unwrap();
            let r = analyze(&spec, text.as_bytes(), &AnalysisOptions::default()).unwrap();
            assert!(r.points.iter().any(|p| p.report.as_ref().map(|r| r.label) == Some(label)), "{label}");
        }
        assert!(gallery_spec(Label::B3Candidate).is_err());
    }

    #[test]
    fn pencil_reconstruction() {
        let spec = SurfaceSpec::parse("[domain]\nstart = 0.0\nend = 1.0\n[prescription]\nkappa0 = [1.0]\n").unwrap();
        let r = reconstruct(&spec, None, 1e-2, (11, 3), (-1.0, 1.0)).unwrap();
        assert!(r.developable);
        assert_eq!(r.csv.lines().count(), 102);
        assert!(r.curve.max_defect() < 1e-12);
        let back = SurfaceSpec::parse(&r.spec).unwrap();
        assert_eq!(back.domain, spec.domain);
    }

    #[test]
    fn rejects_non_positive_kappa0() {
        let spec = SurfaceSpec::parse("[domain]\nstart = 0.0\nend = 1.0\n[prescription]\nkappa0 = [1.0, -2.0]\n").unwrap();
        assert!(reconstruct(&spec, None, 1e-2, (11, 3), (-1.0, 1.0)).is_err());
    }
}
