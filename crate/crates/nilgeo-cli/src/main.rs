//! Command-line front end for the nilgeo engine.
//!
//! Subcommands read an algebra document (JSON, `-` for stdin), dispatch to
//! the library, and emit either a human-readable table or a JSON report.
//! Exit codes are stable contracts: 0 on success, 1 on any error, and for
//! `parallel` specifically 0 when Berwald-type Randers metrics exist and 2
//! when none do.

mod fmt;

use clap::{Parser, Subcommand, ValueEnum};
use nilgeo::berwald::{make_berwald_randers, parallel_field_basis};
use nilgeo::curvature::{curvature_scan, curvature_tensor, scalar_curvature, sectional, Plane};
use nilgeo::families::{self, FamilyId};
use nilgeo::io;
use nilgeo::levi_civita::christoffel;
use nilgeo::randers::Flag;
use nilgeo::{ChristoffelTensor, MetricLieAlgebra};
use serde_json::json;
use std::io::Read as _;
use std::process::ExitCode;

const DEFAULT_SEED: u64 = 42;
const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Parser)]
#[command(
    name = "nilgeo",
    version,
    about = "Left-invariant Riemannian and Randers geometry on metric Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra document and report the axiom checks
    Check {
        /// Algebra document path, or - for stdin
        file: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print the Levi-Civita connection coefficients
    Connection {
        file: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print the curvature operator on basis pairs
    Curvature {
        file: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Sectional curvature of the plane spanned by two vectors
    Sectional {
        file: String,
        /// First spanning vector, comma-separated components
        #[arg(long)]
        a: String,
        /// Second spanning vector
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Scalar curvature
    Scalar {
        file: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Parallel left-invariant fields; exit 0 when Berwald-type Randers
    /// metrics exist, 2 when none do
    Parallel {
        file: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Flag curvature of a Berwald-type Randers metric
    Flag {
        file: String,
        /// Deformation field, comma-separated components
        #[arg(long)]
        x: String,
        /// Flag pole vector
        #[arg(long)]
        y: String,
        /// Transverse edge vector
        #[arg(long)]
        u: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Scan random planes (or flags, with --x) for curvature extremes
    Scan {
        file: String,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Scan seed; NILGEO_SEED overrides the default when unset
        #[arg(long)]
        seed: Option<u64>,
        /// Deformation field; switches to a flag-curvature scan
        #[arg(long)]
        x: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Emit the algebra document for a built-in two-step nilpotent family
    Family {
        /// Center dimension: 1, 2 or 3
        #[arg(long)]
        center_dim: usize,
        #[arg(long)]
        lambda: f64,
        /// Second parameter; required for center dimensions 1 and 2,
        /// ignored for 3
        #[arg(long)]
        mu: Option<f64>,
    },
    /// Run the built-in verification suite against the family closed forms
    Verify {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn main() -> ExitCode {
    // die quietly when a downstream reader closes the pipe early, like
    // other unix filters, instead of panicking mid-print
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("nilgeo: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_algebra(path: &str) -> Result<(MetricLieAlgebra, ChristoffelTensor), String> {
    let text = read_input(path)?;
    let alg = io::parse_algebra_validated(&text).map_err(|e| e.to_string())?;
    let ct = christoffel(&alg).map_err(|e| e.to_string())?;
    Ok((alg, ct))
}

fn parse_vec(alg: &MetricLieAlgebra, name: &str, s: &str) -> Result<Vec<f64>, String> {
    let v = fmt::parse_vector(s).map_err(|e| format!("{name}: {e}"))?;
    if v.len() != alg.dim() {
        return Err(format!(
            "{name}: expected {} components, got {}",
            alg.dim(),
            v.len()
        ));
    }
    Ok(v)
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, String> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("NILGEO_SEED") {
        Ok(s) => s
            .parse::<u64>()
            .map_err(|_| format!("NILGEO_SEED must be an unsigned integer, got {s:?}")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn report_lines(report: &nilgeo::ValidationReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        out.push_str(&format!(
            "{} {} (residual {})\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            fmt::format_real(c.residual)
        ));
    }
    out.push_str(&format!(
        "overall: {}\n",
        if report.overall { "PASS" } else { "FAIL" }
    ));
    out
}

fn basis_header(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("e{j}")).collect()
}

fn run(cmd: Command) -> Result<u8, String> {
    match cmd {
        Command::Check { file, format } => {
            let text = read_input(&file)?;
            let alg = io::parse_algebra(&text).map_err(|e| e.to_string())?;
            let report = alg.validate();
            let facts = if report.overall {
                Some((
                    alg.dim(),
                    alg.center().len(),
                    alg.derived_subalgebra().len(),
                    alg.is_two_step_nilpotent(),
                ))
            } else {
                None
            };
            match format {
                Format::Table => {
                    print!("{}", report_lines(&report));
                    if let Some((dim, center, derived, two_step)) = facts {
                        println!("dimension: {dim}");
                        println!("center dimension: {center}");
                        println!("derived dimension: {derived}");
                        println!("two-step nilpotent: {two_step}");
                    }
                }
                Format::Json => {
                    let mut value = json!({ "report": report });
                    if let Some((dim, center, derived, two_step)) = facts {
                        value["dimension"] = json!(dim);
                        value["center_dimension"] = json!(center);
                        value["derived_dimension"] = json!(derived);
                        value["two_step_nilpotent"] = json!(two_step);
                    }
                    print_json(&value);
                }
            }
            Ok(if report.overall { 0 } else { 1 })
        }

        Command::Connection { file, format } => {
            let (alg, ct) = load_algebra(&file)?;
            let n = alg.dim();
            match format {
                Format::Table => {
                    let rows: Vec<(String, Vec<String>)> = (0..n)
                        .map(|i| {
                            let label = format!("nabla_e{}", i + 1);
                            let cells = (0..n)
                                .map(|j| fmt::combo(&ct.basis_derivative(i, j)))
                                .collect();
                            (label, cells)
                        })
                        .collect();
                    print!("{}", fmt::table("", &basis_header(n), &rows));
                }
                Format::Json => {
                    print_json(&json!({
                        "dimension": n,
                        "gamma": ct.gamma().to_nested(),
                    }));
                }
            }
            Ok(0)
        }

        Command::Curvature { file, format } => {
            let (alg, ct) = load_algebra(&file)?;
            let n = alg.dim();
            let r = curvature_tensor(&alg, &ct).map_err(|e| e.to_string())?;
            match format {
                Format::Table => {
                    let mut rows = Vec::new();
                    for i in 0..n {
                        for j in (i + 1)..n {
                            let label = format!("R(e{},e{})", i + 1, j + 1);
                            let cells = (0..n)
                                .map(|k| fmt::combo(&r.basis_entry(i, j, k)))
                                .collect();
                            rows.push((label, cells));
                        }
                    }
                    print!("{}", fmt::table("", &basis_header(n), &rows));
                }
                Format::Json => {
                    let mut entries = Vec::new();
                    for i in 0..n {
                        for j in (i + 1)..n {
                            for k in 0..n {
                                for l in 0..n {
                                    let value = r.get(i, j, k, l);
                                    if value != 0.0 {
                                        entries.push(json!({
                                            "i": i + 1,
                                            "j": j + 1,
                                            "k": k + 1,
                                            "l": l + 1,
                                            "value": value,
                                        }));
                                    }
                                }
                            }
                        }
                    }
                    print_json(&json!({ "dimension": n, "entries": entries }));
                }
            }
            Ok(0)
        }

        Command::Sectional { file, a, b, format } => {
            let (alg, ct) = load_algebra(&file)?;
            let a = parse_vec(&alg, "a", &a)?;
            let b = parse_vec(&alg, "b", &b)?;
            let plane = Plane::new(&alg, &a, &b).map_err(|e| e.to_string())?;
            let k = sectional(&alg, &ct, &plane).map_err(|e| e.to_string())?;
            match format {
                Format::Table => println!("{}", fmt::format_real(k)),
                Format::Json => print_json(&json!({ "sectional_curvature": k })),
            }
            Ok(0)
        }

        Command::Scalar { file, format } => {
            let (alg, ct) = load_algebra(&file)?;
            let s = scalar_curvature(&alg, &ct).map_err(|e| e.to_string())?;
            match format {
                Format::Table => println!("{}", fmt::format_real(s)),
                Format::Json => print_json(&json!({ "scalar_curvature": s })),
            }
            Ok(0)
        }

        Command::Parallel { file, format } => {
            let (alg, ct) = load_algebra(&file)?;
            let basis = parallel_field_basis(&alg, &ct).map_err(|e| e.to_string())?;
            let exist = !basis.is_empty();
            match format {
                Format::Table => {
                    println!("kernel dimension {}", basis.len());
                    for (idx, v) in basis.iter().enumerate() {
                        println!("basis {}: {}", idx + 1, fmt::combo(v));
                    }
                }
                Format::Json => {
                    print_json(&json!({
                        "kernel_dimension": basis.len(),
                        "basis": basis,
                        "berwald_randers_exist": exist,
                    }));
                }
            }
            Ok(if exist { 0 } else { 2 })
        }

        Command::Flag {
            file,
            x,
            y,
            u,
            format,
        } => {
            let (alg, ct) = load_algebra(&file)?;
            let x = parse_vec(&alg, "x", &x)?;
            let y = parse_vec(&alg, "y", &y)?;
            let u = parse_vec(&alg, "u", &u)?;
            let rm = make_berwald_randers(&alg, &ct, &x).map_err(|e| e.to_string())?;
            let flag = Flag::new(&alg, &y, &u).map_err(|e| e.to_string())?;
            let k = rm.flag_curvature(&flag).map_err(|e| e.to_string())?;
            let plane = Plane::new(&alg, &y, &u).map_err(|e| e.to_string())?;
            let kr = sectional(&alg, &ct, &plane).map_err(|e| e.to_string())?;
            // for a parallel deformation, K = K_R / (1 + <x, y/|y|>)^2
            let ny = alg.norm(&y).map_err(|e| e.to_string())?;
            let unit_y: Vec<f64> = y.iter().map(|c| c / ny).collect();
            let denom = {
                let xy = alg.inner(&x, &unit_y).map_err(|e| e.to_string())?;
                (1.0 + xy) * (1.0 + xy)
            };
            match format {
                Format::Table => {
                    println!("flag curvature: {}", fmt::format_real(k));
                    println!("sectional curvature: {}", fmt::format_real(kr));
                    println!("denominator: {}", fmt::format_real(denom));
                }
                Format::Json => {
                    print_json(&json!({
                        "flag_curvature": k,
                        "sectional_curvature": kr,
                        "denominator": denom,
                    }));
                }
            }
            Ok(0)
        }

        Command::Scan {
            file,
            samples,
            seed,
            x,
            format,
        } => {
            let (alg, ct) = load_algebra(&file)?;
            let seed = resolve_seed(seed)?;
            match x {
                None => {
                    let scan =
                        curvature_scan(&alg, &ct, samples, seed).map_err(|e| e.to_string())?;
                    match format {
                        Format::Table => {
                            println!("samples: {samples}");
                            println!("seed: {seed}");
                            println!("min: {}", fmt::format_real(scan.min_value));
                            println!("min witness a: {}", fmt::csv(scan.argmin.a()));
                            println!("min witness b: {}", fmt::csv(scan.argmin.b()));
                            println!("max: {}", fmt::format_real(scan.max_value));
                            println!("max witness a: {}", fmt::csv(scan.argmax.a()));
                            println!("max witness b: {}", fmt::csv(scan.argmax.b()));
                        }
                        Format::Json => {
                            print_json(&json!({
                                "samples": samples,
                                "seed": seed,
                                "min": scan.min_value,
                                "max": scan.max_value,
                                "argmin": { "a": scan.argmin.a(), "b": scan.argmin.b() },
                                "argmax": { "a": scan.argmax.a(), "b": scan.argmax.b() },
                            }));
                        }
                    }
                }
                Some(x) => {
                    let x = parse_vec(&alg, "x", &x)?;
                    let rm = make_berwald_randers(&alg, &ct, &x).map_err(|e| e.to_string())?;
                    let scan = rm.flag_scan(samples, seed).map_err(|e| e.to_string())?;
                    match format {
                        Format::Table => {
                            println!("samples: {samples}");
                            println!("seed: {seed}");
                            println!("min: {}", fmt::format_real(scan.min_value));
                            println!("min witness pole: {}", fmt::csv(scan.argmin.pole()));
                            println!("min witness edge: {}", fmt::csv(scan.argmin.edge()));
                            println!("max: {}", fmt::format_real(scan.max_value));
                            println!("max witness pole: {}", fmt::csv(scan.argmax.pole()));
                            println!("max witness edge: {}", fmt::csv(scan.argmax.edge()));
                            println!(
                                "nearest-zero |K|: {}",
                                fmt::format_real(scan.min_abs_value)
                            );
                            println!(
                                "nearest-zero pole: {}",
                                fmt::csv(scan.arg_min_abs.pole())
                            );
                            println!(
                                "nearest-zero edge: {}",
                                fmt::csv(scan.arg_min_abs.edge())
                            );
                        }
                        Format::Json => {
                            print_json(&json!({
                                "samples": samples,
                                "seed": seed,
                                "min": scan.min_value,
                                "max": scan.max_value,
                                "min_abs": scan.min_abs_value,
                                "argmin": { "pole": scan.argmin.pole(), "edge": scan.argmin.edge() },
                                "argmax": { "pole": scan.argmax.pole(), "edge": scan.argmax.edge() },
                                "arg_min_abs": {
                                    "pole": scan.arg_min_abs.pole(),
                                    "edge": scan.arg_min_abs.edge(),
                                },
                            }));
                        }
                    }
                }
            }
            Ok(0)
        }

        Command::Family {
            center_dim,
            lambda,
            mu,
        } => {
            let id = FamilyId::from_center_dim(center_dim)
                .ok_or_else(|| format!("center dimension must be 1, 2 or 3, got {center_dim}"))?;
            let mu = match (id, mu) {
                (FamilyId::Center3, _) => 1.0,
                (_, Some(mu)) => mu,
                (_, None) => {
                    return Err(format!(
                        "--mu is required for center dimension {center_dim}"
                    ))
                }
            };
            let alg = families::family(id, lambda, mu).map_err(|e| e.to_string())?;
            print!("{}", io::emit_algebra(&alg));
            Ok(0)
        }

        Command::Verify { format } => {
            let report = families::verify_reference();
            match format {
                Format::Table => print!("{}", report_lines(&report)),
                Format::Json => print_json(
                    &serde_json::to_value(&report).expect("report serializes"),
                ),
            }
            Ok(if report.overall { 0 } else { 1 })
        }
    }
}
