//! Command-line front end. Exit code 0 on success, 1 on domain errors, 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bands::sample_bands;
use crate::eigvec::{synthesize_eigenvector, unfold, verify_eigenvector};
use crate::error::FlatBandError;
use crate::finite::FiniteGraph;
use crate::floquet::{detect_flat_bands, detect_flat_bands_with, DetectOptions};
use crate::generators::{cartesian_flatband, cartesian_product, cone_periodize, no_flatband_product, ProductKind};
use crate::io::{read_graph, write_graph};
use crate::perturbation::{coefficient_system, detect_with_potential, empty_locus_certificate, nu2_locus, parse_potential};
use crate::screen::screen_nu2;
use crate::singlecell::{eigen_table, enumerate_single_cell};
use crate::symmetry::{find_local_symmetries, symmetry_flat_bands, SymmetryMode};

#[derive(Parser, Debug)]
#[command(name = "flatband", version, about = "Exact flat-band analysis of periodic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a graph file and list every problem found
    Validate { file: PathBuf },
    /// Exact flat bands with multiplicities
    Detect {
        file: PathBuf,
        #[arg(long)]
        force_disconnected: bool,
    },
    /// Compactly supported eigenvector of one flat band
    Eigvec {
        file: PathBuf,
        /// Index into the detected flat bands, ascending
        #[arg(long)]
        band: usize,
    },
    /// Sample the bands on a uniform grid
    Bands {
        file: PathBuf,
        #[arg(long)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = BandFormat::Csv)]
        format: BandFormat,
    },
    /// Single-cell flat-band values for nu vertices per cell
    Enumerate {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        witnesses: bool,
        /// Print the eigenvalue table of the connected graphs on nu vertices instead
        #[arg(long)]
        table: bool,
    },
    /// Local symmetries and the flat bands they force
    Symmetry {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Equitable)]
        mode: ModeArg,
    },
    /// Build a periodic graph from a finite graph
    Generate {
        #[arg(value_enum)]
        kind: GenerateKind,
        /// Periodic base graph (cartesian, tensor)
        #[arg(long)]
        base: Option<PathBuf>,
        /// Finite graph: P<n>, C<n>, K<n> or E<n>:a-b,c-d,...
        #[arg(long)]
        finite: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Potentials and flat bands
    Perturb {
        file: PathBuf,
        /// Rational potential, comma separated
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Solve for the potentials with a flat band (two vertices per cell)
        #[arg(long)]
        locus: bool,
    },
    /// Combinatorial screen for two vertices per cell
    Screen2 { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BandFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Strict,
    Equitable,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenerateKind {
    Cartesian,
    Cone,
    Tensor,
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn io_err(path: &std::path::Path, e: std::io::Error) -> FlatBandError {
    FlatBandError::Io(format!("{}: {}", path.display(), e))
}

fn execute(cmd: Command) -> Result<(String, i32), FlatBandError> {
    Ok(match cmd {
        Command::Validate { file } => {
            let g = read_graph(&file)?;
            let report = g.validate();
            if report.is_ok() {
                let c = g.connectivity();
                (pretty(&json!({"valid": true, "quotient_connected": c.quotient_connected, "lattice_generated": c.lattice_generated})), 0)
            } else {
                let issues: Vec<String> = report.issues.iter().map(|i| i.to_string()).collect();
                (pretty(&json!({"valid": false, "issues": issues})), 1)
            }
        }
        Command::Detect { file, force_disconnected } => {
            let g = read_graph(&file)?;
            (pretty(&detect_flat_bands_with(&g, DetectOptions { force_disconnected })?.to_json()), 0)
        }
        Command::Eigvec { file, band } => {
            let g = read_graph(&file)?;
            let report = detect_flat_bands(&g)?;
            let fb = report.flat_bands.get(band).ok_or(FlatBandError::OutOfRange { index: band, len: report.flat_bands.len() })?;
            let v = unfold(&synthesize_eigenvector(&g, &fb.value)?);
            let mut out = v.to_json();
            out["verified"] = json!(verify_eigenvector(&g, &v));
            (pretty(&out), 0)
        }
        Command::Bands { file, grid, out, format } => {
            let g = read_graph(&file)?;
            if grid == 0 {
                return Err(FlatBandError::Precondition("grid must be positive".into()));
            }
            let sample = sample_bands(&g, grid);
            let text = match format {
                BandFormat::Csv => sample.to_csv(),
                BandFormat::Json => pretty(&sample.to_json()),
            };
            std::fs::write(&out, text).map_err(|e| io_err(&out, e))?;
            let flat: Vec<Value> = sample.flat_values(1e-9).iter().map(|(v, m)| json!({"value": v, "multiplicity": m})).collect();
            (pretty(&json!({"points": sample.points.len(), "out": out.display().to_string(), "numerically_flat": flat})), 0)
        }
        Command::Enumerate { nu, witnesses, table } => {
            if table {
                if nu == 0 || nu > crate::singlecell::MAX_ENUMERATION_NU {
                    return Err(FlatBandError::Precondition("table supports 1 <= nu <= 6".into()));
                }
                (eigen_table(nu), 0)
            } else {
                (pretty(&enumerate_single_cell(nu)?.to_json(witnesses)), 0)
            }
        }
        Command::Symmetry { file, mode } => {
            let g = read_graph(&file)?;
            let mode = match mode {
                ModeArg::Strict => SymmetryMode::Strict,
                ModeArg::Equitable => SymmetryMode::Equitable,
            };
            let mut items = Vec::new();
            for sym in find_local_symmetries(&g, mode)? {
                let bands = symmetry_flat_bands(&g, &sym)?;
                items.push(json!({
                    "permutation": sym.to_string(),
                    "orbits": sym.orbit_count(),
                    "cycle_sizes": sym.cycle_sizes(),
                    "flat_bands": bands.iter().map(|b| json!({
                        "value": b.value.to_string(),
                        "multiplicity": b.eigenvectors.len(),
                        "eigenvectors": b.eigenvectors.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                }));
            }
            (pretty(&json!({"mode": format!("{:?}", mode).to_lowercase(), "symmetries": items})), 0)
        }
        Command::Generate { kind, base, finite, out } => {
            let gf = FiniteGraph::parse(&finite)?;
            let need_base = || base.as_ref().ok_or_else(|| FlatBandError::Precondition("--base is required for this generator".into())).and_then(read_graph);
            let (graph, claimed): (_, Vec<String>) = match kind {
                GenerateKind::Cone => {
                    let g = cone_periodize(&gf)?;
                    let v = g.values().iter().map(|x| x.to_string()).collect();
                    (g.graph, v)
                }
                GenerateKind::Cartesian => {
                    let b = need_base()?;
                    if detect_flat_bands(&b)?.flat_bands.is_empty() {
                        (no_flatband_product(&b, &gf, ProductKind::Cartesian).or_else(|_| Ok::<_, FlatBandError>(cartesian_product(&b, &gf)))?, vec![])
                    } else {
                        let g = cartesian_flatband(&b, &gf)?;
                        let v = g.values().iter().map(|x| x.to_string()).collect();
                        (g.graph, v)
                    }
                }
                GenerateKind::Tensor => (no_flatband_product(&need_base()?, &gf, ProductKind::Tensor)?, vec![]),
            };
            write_graph(&out, &graph)?;
            let detected: Vec<String> = detect_flat_bands(&graph)?.values().iter().map(|x| x.to_string()).collect();
            (pretty(&json!({"out": out.display().to_string(), "nu": graph.nu(), "claimed_flat_bands": claimed, "detected_flat_bands": detected})), 0)
        }
        Command::Perturb { file, q, locus } => {
            let g = read_graph(&file)?;
            let mut out = json!({});
            if let Some(q) = q {
                out["potential"] = json!(q);
                out["report"] = detect_with_potential(&g, &parse_potential(&q)?)?.to_json();
            }
            if locus {
                let l = nu2_locus(&g)?;
                out["locus"] = l.to_json();
                out["locus_text"] = json!(l.to_string());
            }
            if out.as_object().is_some_and(|o| o.is_empty()) {
                let cs = coefficient_system(&g);
                out["certificate"] = json!(empty_locus_certificate(&cs));
                out["system"] = cs.to_json();
            }
            (pretty(&out), 0)
        }
        Command::Screen2 { file } => {
            let g = read_graph(&file)?;
            (pretty(&screen_nu2(&g)?.to_json()), 0)
        }
    })
}

/// Parses `args` (program name first) and runs the command, writing results to `out` and errors to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{}", text);
            } else {
                let _ = write!(err, "{}", text);
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = write!(out, "{}", text);
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            1
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}
