//! Command-line front end: file I/O, construction, verification, refutation
//! and report emission for every operation in the toolkit.
//!
//! Exit codes are the pass/fail channel: 0 when every embedded verification
//! passed, 1 when a verified property failed, 2 on malformed input. Reports
//! go to standard output as JSON and are byte-for-byte deterministic;
//! human-readable diagnostics go to standard error.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use polyext::extensions::{extension_report, refute_hidden_free, ExtensionError};
use polyext::heptagon::{
    build_cross_polytope_extension, build_heptagon_extension, build_hexagon_prism_extension,
    check_general_position, Heptagon,
};
use polyext::polytope::{self, hull, vertices_of, HPolytope, PolytopeError};
use polyext::products::{prism_at, verify_slice_lemma};
use polyext::{Rational, VPolytope};

#[derive(Parser)]
#[command(
    name = "polyext",
    version,
    about = "Exact toolkit for polytope extensions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Canonical H-representation of a V-form polytope file
    Hull {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Canonical V-representation of an H-form polytope file
    Vertices {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive general-position check of a heptagon
    GpCheck {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Six-facet lift-and-cut extension of a heptagon
    BuildExt {
        #[arg(long = "in")]
        input: PathBuf,
        /// lift height over the first labeled vertex, a positive rational
        #[arg(long, default_value = "1")]
        z1: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extension report for a candidate over a target polytope
    VerifyExt {
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        ext: PathBuf,
        /// also verify the slice bookkeeping of the candidate as an
        /// extension of target x [0,1] with the interval at this 0-based
        /// coordinate
        #[arg(long)]
        coord: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Refutation witness against a claimed hidden-vertex-free certificate
    Refute {
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// d-fold prism product with the unit interval
    Product {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// insert new coordinates after this block instead of appending,
        /// keeping a trailing auxiliary block last (0-based block size)
        #[arg(long)]
        xblock: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fixed example extensions
    Gallery {
        kind: GalleryKind,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GalleryKind {
    /// cross-polytope as a projection of a simplex
    CrossPolytope,
    /// hexagon as a projection of a triangular prism
    Hexagon,
}

/// Input-level failure, reported on stderr with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn input_error(msg: impl fmt::Display) -> InputError {
    InputError(msg.to_string())
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    schema_version: &'static str,
    #[serde(flatten)]
    body: T,
}

fn emit<T: Serialize>(body: T, out: Option<&Path>) -> Result<(), InputError> {
    let report = Report {
        schema_version: "1",
        body,
    };
    let text = serde_json::to_string_pretty(&report).map_err(input_error)?;
    println!("{text}");
    if let Some(path) = out {
        fs::write(path, format!("{text}\n")).map_err(input_error)?;
    }
    Ok(())
}

/// Writes the bare polytope JSON so the file can feed another command.
fn write_polytope<T: Serialize>(poly: &T, out: Option<&Path>) -> Result<(), InputError> {
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(poly).map_err(input_error)?;
        fs::write(path, format!("{text}\n")).map_err(input_error)?;
    }
    Ok(())
}

fn read_json(path: &Path) -> Result<Value, InputError> {
    let text = fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| input_error(format!("{} is not valid JSON: {e}", path.display())))
}

/// Loads a polytope in either representation; H-form inputs are converted
/// through exact vertex enumeration first.
fn load_polytope(path: &Path) -> Result<VPolytope, InputError> {
    let value = read_json(path)?;
    if value.get("vertices").is_some() {
        serde_json::from_value(value).map_err(|e| input_error(format!("{}: {e}", path.display())))
    } else if value.get("inequalities").is_some() {
        let h: HPolytope = serde_json::from_value(value)
            .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
        vertices_of(&h).map_err(|e| input_error(format!("{}: {e}", path.display())))
    } else {
        Err(input_error(format!(
            "{}: expected a polytope with \"vertices\" or \"inequalities\"",
            path.display()
        )))
    }
}

fn load_heptagon(path: &Path) -> Result<Heptagon, InputError> {
    let value = read_json(path)?;
    serde_json::from_value(value).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn run(cmd: Cmd) -> Result<ExitCode, InputError> {
    match cmd {
        Cmd::Hull { input, out } => {
            let v = load_polytope(&input)?;
            let (_, h) = hull(v.vertices()).map_err(input_error)?;
            write_polytope(&h, out.as_deref())?;
            #[derive(Serialize)]
            struct Body {
                polytope: HPolytope,
            }
            emit(Body { polytope: h }, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Vertices { input, out } => {
            let value = read_json(&input)?;
            let h: HPolytope = serde_json::from_value(value)
                .map_err(|e| input_error(format!("{}: {e}", input.display())))?;
            match vertices_of(&h) {
                Ok(v) => {
                    write_polytope(&v, out.as_deref())?;
                    #[derive(Serialize)]
                    struct Body {
                        polytope: VPolytope,
                    }
                    emit(Body { polytope: v }, None)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ (PolytopeError::Unbounded | PolytopeError::Empty)) => {
                    #[derive(Serialize)]
                    struct Body {
                        error: String,
                    }
                    let name = if matches!(e, PolytopeError::Unbounded) {
                        "unbounded"
                    } else {
                        "empty"
                    };
                    emit(
                        Body {
                            error: name.to_string(),
                        },
                        out.as_deref(),
                    )?;
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(input_error(e)),
            }
        }
        Cmd::GpCheck { input, out } => {
            let heptagon = load_heptagon(&input)?;
            let report = check_general_position(&heptagon);
            let ok = report.in_general_position;
            emit(report, out.as_deref())?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::BuildExt { input, z1, out } => {
            let heptagon = load_heptagon(&input)?;
            let z1: Rational = z1.parse().map_err(|e| input_error(format!("--z1: {e}")))?;
            if !z1.is_positive() {
                return Err(input_error("--z1 must be positive"));
            }
            match build_heptagon_extension(&heptagon, &z1) {
                Ok(ext) => {
                    let report = extension_report(&ext.q_v, &heptagon.to_polytope());
                    let ok = report.is_extension
                        && report.extension_size == 6
                        && report.hidden.len() == 1;
                    write_polytope(&ext.q_v, out.as_deref())?;
                    #[derive(Serialize)]
                    struct Body {
                        extension: polyext::heptagon::LiftedExtension,
                        report: polyext::extensions::ExtensionReport,
                    }
                    emit(
                        Body {
                            extension: ext,
                            report,
                        },
                        None,
                    )?;
                    Ok(if ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    })
                }
                Err(polyext::heptagon::HeptagonError::NoValidLabeling) => {
                    eprintln!("no relabeling admits the construction");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(input_error(e)),
            }
        }
        Cmd::VerifyExt {
            target,
            ext,
            coord,
            out,
        } => {
            let p = load_polytope(&target)?;
            let q = load_polytope(&ext)?;
            if let Some(coord) = coord {
                return match verify_slice_lemma(&q, &p, coord) {
                    Ok(report) => {
                        let ok = report.inequality_holds == [true, true]
                            && report.slices_are_extensions == [true, true];
                        emit(report, out.as_deref())?;
                        Ok(if ok {
                            ExitCode::SUCCESS
                        } else {
                            ExitCode::from(1)
                        })
                    }
                    Err(polyext::products::ProductError::NotAnExtension) => {
                        eprintln!("candidate is not an extension of target x [0,1]");
                        Ok(ExitCode::from(1))
                    }
                    Err(e) => Err(input_error(e)),
                };
            }
            let report = extension_report(&q, &p);
            let ok = report.is_extension;
            emit(report, out.as_deref())?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Refute { target, cert, out } => {
            let heptagon = load_heptagon(&target)?;
            let q = load_polytope(&cert)?;
            match refute_hidden_free(&heptagon, &q) {
                Ok(witness) => {
                    #[derive(Serialize)]
                    struct Body {
                        witness: polyext::extensions::RefutationWitness,
                    }
                    emit(Body { witness }, out.as_deref())?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(ExtensionError::NotGeneralPosition) => {
                    Err(input_error("target heptagon is not in general position"))
                }
                Err(ExtensionError::InternalExhaustion) => {
                    eprintln!("no witness found");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(input_error(e)),
            }
        }
        Cmd::Product {
            input,
            d,
            xblock,
            out,
        } => {
            let p = load_polytope(&input)?;
            let block = xblock.unwrap_or(p.dim());
            if block > p.dim() {
                return Err(input_error("--xblock exceeds the polytope dimension"));
            }
            if d > 6 {
                return Err(input_error("--d must be at most 6"));
            }
            let base_size = polytope::size(&hull(p.vertices()).map_err(input_error)?.1);
            let mut q = p.clone();
            for i in 0..d {
                q = prism_at(&q, block + i).map_err(input_error)?;
            }
            let size = polytope::size(&hull(q.vertices()).map_err(input_error)?.1);
            let ok = q.vertex_count() == p.vertex_count() << d && size == base_size + 2 * d;
            write_polytope(&q, out.as_deref())?;
            #[derive(Serialize)]
            struct Body {
                polytope: VPolytope,
                vertex_count: usize,
                size: usize,
            }
            emit(
                Body {
                    vertex_count: q.vertex_count(),
                    size,
                    polytope: q,
                },
                None,
            )?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Gallery { kind, d, out } => {
            let (p, q) = match kind {
                GalleryKind::CrossPolytope => {
                    build_cross_polytope_extension(d).map_err(input_error)?
                }
                GalleryKind::Hexagon => build_hexagon_prism_extension(),
            };
            let report = extension_report(&q, &p);
            let ok = report.is_extension && report.hidden.is_empty();
            write_polytope(&q, out.as_deref())?;
            #[derive(Serialize)]
            struct Body {
                target: VPolytope,
                extension: VPolytope,
                report: polyext::extensions::ExtensionReport,
            }
            emit(
                Body {
                    target: p,
                    extension: q,
                    report,
                },
                None,
            )?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
