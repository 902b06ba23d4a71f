use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ruledkit::report::AnalysisReport;
use ruledkit_core::classification::Label;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ruledkit"));
    c.env_remove("RULEDKIT_TOL");
    c
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn report(path: &Path) -> AnalysisReport {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn analyze_prints_parsable_json() {
    let out = run(&["analyze", fixture("gallery_s0.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r: AnalysisReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.points.len(), 1);
    assert_eq!(r.points[0].report.as_ref().unwrap().label, Label::S0);
    assert_eq!(r.provenance.spec_sha256.len(), 64);
}

#[test]
fn report_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&["analyze", fixture("prescription.toml").to_str().unwrap(), "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let r: AnalysisReport = serde_json::from_str(&text).unwrap();
    assert_eq!(ruledkit::json::to_string(&r).unwrap(), text);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[domain]\nstart = 0.0\nend = \n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let missing = dir.path().join("missing.toml");
    assert_eq!(run(&["analyze", missing.to_str().unwrap()]).status.code(), Some(3));

    // the cone apex is not a frontal singularity of any listed type
    assert_eq!(run(&["analyze", fixture("cone.toml").to_str().unwrap()]).status.code(), Some(2));

    let obj = dir.path().join("m.obj");
    let out = run(&["mesh", fixture("helicoid.toml").to_str().unwrap(), "--grid", "64x1", "--t-range", "-1:1", "-o", obj.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(run(&["gallery", "--label", "Q7", "-o", obj.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn tolerance_from_environment() {
    let spec = fixture("gallery_s0.toml");
    let tol = |env: Option<&str>, flag: Option<&str>| {
        let mut c = bin();
        c.arg("analyze").arg(&spec);
        if let Some(v) = env {
            c.env("RULEDKIT_TOL", v);
        }
        if let Some(f) = flag {
            c.args(["--tol", f]);
        }
        let out = c.output().unwrap();
        (out.status.code(), serde_json::from_slice::<AnalysisReport>(&out.stdout).ok())
    };
    let (code, r) = tol(Some("1e-5"), None);
    assert_eq!(code, Some(0));
    assert_eq!(r.unwrap().provenance.tolerances.classification, 1e-5);
    let (_, r) = tol(Some("1e-5"), Some("1e-4"));
    assert_eq!(r.unwrap().provenance.tolerances.classification, 1e-4);
    assert_eq!(tol(Some("lots"), None).0, Some(1));
    assert_eq!(tol(None, Some("2")).0, Some(1));
}

#[test]
fn gallery_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    for label in ["S1-", "H2", "Sw", "cS1+"] {
        let spec = dir.path().join("g.toml");
        assert_eq!(run(&["gallery", "--label", label, "-o", spec.to_str().unwrap()]).status.code(), Some(0));
        let json = dir.path().join("g.json");
        let out = run(&["analyze", spec.to_str().unwrap(), "--json", json.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{label}");
        let r = report(&json);
        assert!(r.points.iter().any(|p| p.s.abs() < 1e-8 && p.report.as_ref().unwrap().label.as_str() == label), "{label}");
    }
}

#[test]
fn analysis_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let spec = fixture("jets_b2.toml");
    let a = run(&["analyze", spec.to_str().unwrap()]);
    let b = run(&["analyze", spec.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let r: AnalysisReport = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r.points[0].report.as_ref().unwrap().label, Label::B2Plus);
    let obj = |name: &str| {
        let p = dir.path().join(name);
        let out = run(&["mesh", spec.to_str().unwrap(), "--grid", "20x5", "--t-range", "-0.5:0.5", "-o", p.to_str().unwrap()]);
        assert!(out.status.success());
        std::fs::read(p).unwrap()
    };
    assert_eq!(obj("a.obj"), obj("b.obj"));
}

#[test]
fn mesh_counts_and_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("s1.toml");
    run(&["gallery", "--label", "S1+", "-o", spec.to_str().unwrap()]);
    let obj = dir.path().join("m.obj");
    for lambda in ["-0.001", "0.001"] {
        let out = run(&[
            "mesh", spec.to_str().unwrap(), "--grid", "30x7", "--t-range", "-1:1", "--lambda", lambda, "-o", obj.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let text = std::fs::read_to_string(&obj).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 210);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 2 * 29 * 6);
    }
    let out = run(&["mesh", fixture("helicoid.toml").to_str().unwrap(), "--grid", "5x5", "--t-range", "-1:1", "--lambda", "0.1", "-o", obj.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reconstruct_writes_outputs_and_aligns() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("helix.toml");
    std::fs::write(
        &spec,
        "[domain]\nstart = 0.0\nend = 3.0\n\n[prescription]\nkappa0 = [0.8]\ntau0 = [0.5]\ntau1 = [1.25]\n\n\
         [compare]\nname = \"helix-tangent-developable\"\nradius = 1.0\npitch = 0.5\n",
    )
    .unwrap();
    let prefix = dir.path().join("out");
    let out = run(&["reconstruct", spec.to_str().unwrap(), "--step", "1e-3", "-o", prefix.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("nodes: 3001"));
    assert!(stdout.contains("developable: true"));
    let residual: f64 = stdout
        .lines()
        .find_map(|l| l.strip_prefix("alignment residual: max "))
        .and_then(|l| l.split(',').next())
        .unwrap()
        .parse()
        .unwrap();
    assert!(residual < 1e-6, "{residual}");

    let csv = std::fs::read_to_string(dir.path().join("out.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3002);
    let row: Vec<f64> = csv.lines().nth(1).unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert!((row[5] - 0.5).abs() < 1e-9 && (row[6] - 1.25).abs() < 1e-9);

    // the written spec reproduces the run
    let again = dir.path().join("again");
    let out = run(&["reconstruct", dir.path().join("out.toml").to_str().unwrap(), "--step", "1e-3", "-o", again.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(dir.path().join("again.obj")).unwrap(), std::fs::read(dir.path().join("out.obj")).unwrap());
}

#[test]
fn reconstruct_from_frame_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("p.toml");
    std::fs::write(&spec, "[domain]\nstart = 0.0\nend = 1.0\n\n[prescription]\nkappa1 = [0.3]\ntau0 = [1.0]\n").unwrap();
    let frame = dir.path().join("f.toml");
    // lines through (0, 0, 1) along the axes
    std::fs::write(&frame, "v = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0]\nn = [0.0, 1.0, 0.0, -1.0, 0.0, 0.0]\nt = [0.0, 0.0, 1.0, 0.0, 0.0, 0.0]\n").unwrap();
    let prefix = dir.path().join("o");
    let out = run(&["reconstruct", spec.to_str().unwrap(), "--step", "0.01", "--init", frame.to_str().unwrap(), "-o", prefix.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(std::fs::read_to_string(dir.path().join("o.toml")).unwrap().contains("[init]"));

    std::fs::write(&frame, "v = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0]\nn = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]\nt = [0.0, 0.0, 1.0, 0.0, 0.0, 0.0]\n").unwrap();
    let out = run(&["reconstruct", spec.to_str().unwrap(), "--step", "0.01", "--init", frame.to_str().unwrap(), "-o", prefix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["reconstruct", spec.to_str().unwrap(), "--step", "-1", "-o", prefix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}
