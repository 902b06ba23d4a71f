//! Command-line front end for `ruledkit-core`: analysis reports, meshes,
//! reconstruction from invariants and gallery specs.

pub mod commands;
pub mod error;
pub mod json;
pub mod mesh;
pub mod report;
pub mod spec;

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use error::{CliError, EXIT_INPUT, EXIT_OK, EXIT_UNRESOLVED};
use report::{AnalysisOptions, DEFAULT_ORDER};
use ruledkit_core::classification::Label;
use ruledkit_core::tolerance::TOL_CLS;
use spec::{FrameSection, SurfaceSpec};

/// Environment variable overriding the default classification tolerance.
pub const TOL_ENV: &str = "RULEDKIT_TOL";

#[derive(Debug, Parser)]
#[command(name = "ruledkit", version, about = "Ruled and developable surfaces: invariants, singularities, reconstruction")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute invariants, singular locus and classification.
    Analyze {
        spec: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Relative zero tolerance for classification.
        #[arg(long)]
        tol: Option<f64>,
        /// Jet order used for classification.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Write a triangulated grid of the surface as OBJ.
    Mesh {
        spec: PathBuf,
        /// Grid size `NSxNT`.
        #[arg(long, value_parser = parse_grid)]
        grid: (usize, usize),
        /// Ruling parameter range `a:b`.
        #[arg(long = "t-range", value_parser = parse_range, allow_hyphen_values = true)]
        t_range: (f64, f64),
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Shift of kappa1 (deformation parameter).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
    },
    /// Integrate the Frenet system of a prescription.
    Reconstruct {
        prescription: PathBuf,
        /// `identity` or a TOML file with `v`, `n`, `t` lines.
        #[arg(long, default_value = "identity")]
        init: String,
        #[arg(long)]
        step: f64,
        /// Output prefix for `.csv`, `.obj` and `.toml`.
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long, value_parser = parse_grid, default_value = "101x11")]
        grid: (usize, usize),
        #[arg(long = "t-range", value_parser = parse_range, allow_hyphen_values = true, default_value = "-1:1")]
        t_range: (f64, f64),
    },
    /// Write a spec for the gallery surface of a singularity type.
    Gallery {
        #[arg(long)]
        label: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected NSxNT, got `{s}`"))?;
    let n = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("bad grid size `{x}`: {e}"));
    Ok((n(a)?, n(b)?))
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected a:b, got `{s}`"))?;
    let x = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("bad number `{v}`: {e}"));
    Ok((x(a)?, x(b)?))
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn load_spec(path: &Path) -> Result<(SurfaceSpec, Vec<u8>), CliError> {
    let bytes = read(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|_| CliError::input(format!("{}: not UTF-8", path.display())))?;
    let spec = SurfaceSpec::parse(text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    Ok((spec, bytes))
}

/// Classification tolerance: flag, then environment, then default.
fn tolerance(flag: Option<f64>) -> Result<f64, CliError> {
    let tol = match (flag, std::env::var(TOL_ENV)) {
        (Some(t), _) => t,
        (None, Ok(v)) => v.trim().parse().map_err(|_| CliError::input(format!("{TOL_ENV}: not a number: `{v}`")))?,
        (None, Err(_)) => TOL_CLS,
    };
    if !(tol > 0.0 && tol < 1.0) {
        return Err(CliError::input(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    Ok(tol)
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

/// Executes a parsed command and returns the exit code.
pub fn execute(cmd: Command) -> Result<i32, CliError> {
    let mut stdout = std::io::stdout().lock();
    match cmd {
        Command::Analyze { spec, json: json_out, tol, order } => {
            let (s, bytes) = load_spec(&spec)?;
            let opts = AnalysisOptions { tol: tolerance(tol)?, order: order.unwrap_or(DEFAULT_ORDER) };
            let report = report::analyze(&s, &bytes, &opts)?;
            let text = json::to_string(&report).map_err(|e| CliError::input(format!("report: {e}")))?;
            match json_out {
                Some(path) => {
                    write(&path, &text)?;
                    let _ = writeln!(stdout, "developable: {}", report.developable);
                    for p in &report.points {
                        let label = p.report.as_ref().map_or("error", |r| r.label.as_str());
                        let _ = writeln!(stdout, "s = {:.9}: {}", p.s, label);
                    }
                }
                None => {
                    let _ = stdout.write_all(text.as_bytes());
                }
            }
            Ok(if report.has_unresolved() { EXIT_UNRESOLVED } else { EXIT_OK })
        }
        Command::Mesh { spec, grid, t_range, output, lambda } => {
            let (s, _) = load_spec(&spec)?;
            let curve = s.build(lambda)?;
            let m = mesh::build(&*curve, grid.0, grid.1, t_range)?;
            write(&output, &m.to_obj())?;
            let _ = writeln!(stdout, "{} vertices, {} faces", m.vertices.len(), m.faces.len());
            Ok(EXIT_OK)
        }
        Command::Reconstruct { prescription, init, step, output, grid, t_range } => {
            let (s, _) = load_spec(&prescription)?;
            let init = match init.as_str() {
                "identity" => None,
                path => {
                    let bytes = read(Path::new(path))?;
                    let text = String::from_utf8_lossy(&bytes);
                    let f: FrameSection =
                        toml::from_str(&text).map_err(|e| CliError::input(format!("{path}: {e}")))?;
                    let frame = f.to_frame();
                    if frame.defect() > ruledkit_core::tolerance::TOL_UNIT {
                        return Err(CliError::input(format!("{path}: frame is not dual orthonormal")));
                    }
                    Some(frame)
                }
            };
            let r = commands::reconstruct(&s, init, step, grid, t_range)?;
            write(&with_extension(&output, "csv"), &r.csv)?;
            write(&with_extension(&output, "obj"), &r.obj)?;
            write(&with_extension(&output, "toml"), &r.spec)?;
            let _ = writeln!(stdout, "nodes: {}", r.curve.nodes().len());
            let _ = writeln!(stdout, "max frame defect: {:e}", r.curve.max_defect());
            let _ = writeln!(stdout, "developable: {}", r.developable);
            if let Some(a) = r.alignment {
                let _ = writeln!(stdout, "alignment residual: max {:e}, rms {:e}", a.max_residual, a.rms_residual);
            }
            Ok(EXIT_OK)
        }
        Command::Gallery { label, output } => {
            let label: Label = label.parse().map_err(|e| CliError::input(format!("--label: {e}")))?;
            write(&output, &commands::gallery_spec(label)?)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses arguments, runs, reports errors on stderr and returns the exit
/// code: 0 success, 1 input error, 2 unresolved labels, 3 IO error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
