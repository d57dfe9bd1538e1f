//! Command-line front-end for the gyrovec library: velocity composition,
//! gyrations and precession angles, angle sweeps, polygonal-orbit
//! precession, boost factorization checks, hyperbolic-geometry helpers,
//! and a batch law audit.
//!
//! Output is a single JSON document or CSV table per invocation, floats
//! printed with 17 significant digits, deterministic for fixed flags.
//! Exit codes: 0 success, 1 property violation, 2 usage/validation error.

use clap::{Parser, Subcommand, ValueEnum};
use gyrovec::ball::{self, BallVec};
use gyrovec::gyration::{angle_from_k, gyr_closed_form, gyr_definitional, precession_angles};
use gyrovec::hyperbolic::{gyromidpoint, gyromidpoint_coadd, metric_tensor, GyroTriangle};
use gyrovec::lorentz::boost_composition_check;
use gyrovec::precession::{total_precession, OrbitConfig};
use gyrovec::signcheck::{sign_check, DEFAULT_PROBE};
use gyrovec::vec3::{self, Vec3};
use gyrovec::full_audit;
use serde_json::{json, Map, Value};
use std::process::ExitCode;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Parser)]
#[command(name = "gyrovec", version, about = "Relativistic velocity algebra toolkit")]
struct Cli {
    /// Ball radius (vacuum speed limit).
    #[arg(long, global = true, default_value_t = 1.0)]
    c: f64,
    /// Residual threshold for pass/fail verdicts.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Seed for sampled subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two velocities: u (+) v, v (+) u, u (++) v, gamma factors.
    Add {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Apply gyr[u, v] to w and report the rotation matrix.
    Gyrate {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Generating angle theta, parameter k, and precession angle epsilon.
    Angle {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// CSV/JSON sweep of (cos eps, -sin eps) over theta in [0, 2 pi].
    Sweep {
        /// Comma-separated k values, each > 1.
        #[arg(long)]
        k: String,
        /// Number of theta grid points, at least 2.
        #[arg(long, default_value_t = 181)]
        samples: usize,
    },
    /// Accumulated precession around a regular polygonal orbit.
    Orbit {
        #[arg(long)]
        speed: f64,
        #[arg(long)]
        sides: u64,
    },
    /// Residuals of the two boost composition factorizations.
    BoostCheck {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Batch law audit over seeded random samples.
    Audit {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0.95)]
        max_speed: f64,
    },
    /// Sign-opposition check: epsilon against theta, with residual.
    SignCheck {
        #[arg(long)]
        u: String,
        #[arg(long)]
        theta: f64,
        /// Speed ratio |v| / |u|.
        #[arg(long, default_value_t = 1.0)]
        ratio: f64,
        /// Probe vector; defaults to a fixed in-plane probe.
        #[arg(long)]
        w: Option<String>,
        /// Accept sin theta = 0, where the verdict is undefined.
        #[arg(long, default_value_t = false)]
        allow_degenerate: bool,
    },
    /// Gyromidpoint of two points, via both defining formulas.
    Midpoint {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Gyrotriangle defect and side gamma factors.
    Defect {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Metric tensor of the disc model at a planar point.
    Metric {
        /// Point x1,x2 inside the disc.
        #[arg(long)]
        x: String,
    },
}

/// 17 significant digits: round-trips f64 exactly.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_vec(text: &str) -> Result<Vec3, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 && parts.len() != 3 {
        return Err(format!("expected 2 or 3 comma-separated reals, got {text:?}"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad component {part:?}: {e}"))?;
    }
    Ok(out)
}

fn parse_ball(text: &str, c: f64) -> Result<BallVec, String> {
    BallVec::from_array(parse_vec(text)?, c).map_err(|e| e.to_string())
}

fn vec_value(v: Vec3) -> Value {
    json!([v[0], v[1], v[2]])
}

/// Flatten a JSON object into one CSV header + body row; arrays become
/// suffixed columns.
fn csv_from_object(obj: &Map<String, Value>) -> String {
    let mut header = Vec::new();
    let mut row = Vec::new();
    for (key, value) in obj {
        match value {
            Value::Array(items) => {
                for (i, item) in items.iter().enumerate() {
                    header.push(format!("{key}_{i}"));
                    row.push(scalar_to_csv(item));
                }
            }
            other => {
                header.push(key.clone());
                row.push(scalar_to_csv(other));
            }
        }
    }
    format!("{}\n{}\n", header.join(","), row.join(","))
}

fn scalar_to_csv(value: &Value) -> String {
    match value {
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => fmt17(x),
            _ => n.to_string(),
        },
        Value::Bool(b) => b.to_string(),
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit(format: Format, obj: Map<String, Value>) {
    match format {
        Format::Json => println!("{}", Value::Object(obj)),
        Format::Csv => print!("{}", csv_from_object(&obj)),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn object(entries: Vec<(&str, Value)>) -> Map<String, Value> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.c.is_nan() || cli.c <= 0.0 || cli.tol.is_nan() || cli.tol <= 0.0 {
        return usage_error("--c and --tol must be positive");
    }
    match run(&cli) {
        Ok(code) => code,
        Err(message) => usage_error(&message),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let c = cli.c;
    match &cli.command {
        Command::Add { u, v } => {
            let u = parse_ball(u, c)?;
            let v = parse_ball(v, c)?;
            let uv = ball::einstein_add(&u, &v).map_err(|e| e.to_string())?;
            let vu = ball::einstein_add(&v, &u).map_err(|e| e.to_string())?;
            let co = ball::coadd(&u, &v).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                object(vec![
                    ("u_plus_v", vec_value(uv.components())),
                    ("v_plus_u", vec_value(vu.components())),
                    ("u_coplus_v", vec_value(co.components())),
                    ("gamma_u", json!(ball::gamma(&u).value())),
                    ("gamma_v", json!(ball::gamma(&v).value())),
                    ("gamma_u_plus_v", json!(ball::gamma(&uv).value())),
                ]),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Gyrate { u, v, w } => {
            let u = parse_ball(u, c)?;
            let v = parse_ball(v, c)?;
            let w = parse_ball(w, c)?;
            let rot = gyr_closed_form(&u, &v).map_err(|e| e.to_string())?;
            let image = gyr_definitional(&u, &v, &w).map_err(|e| e.to_string())?;
            let rows = rot.entries();
            emit(
                cli.format,
                object(vec![
                    ("image", vec_value(image.components())),
                    ("row_0", vec_value(rows[0])),
                    ("row_1", vec_value(rows[1])),
                    ("row_2", vec_value(rows[2])),
                    ("orthogonality_residual", json!(rot.orthogonality_residual())),
                    ("trace_identity_residual", json!(rot.trace_identity_residual())),
                ]),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Angle { u, v } => {
            let u = parse_ball(u, c)?;
            let v = parse_ball(v, c)?;
            let angles = precession_angles(&u, &v).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                object(vec![
                    ("theta", json!(angles.theta)),
                    ("epsilon", json!(angles.epsilon)),
                    ("k", json!(angles.k)),
                    ("omega_theta", json!(angles.omega_theta)),
                    ("degenerate", json!(angles.degenerate)),
                ]),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { k, samples } => {
            if *samples < 2 {
                return Err("--samples must be at least 2".into());
            }
            let mut ks = Vec::new();
            for part in k.split(',') {
                let value: f64 = part
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad k value {part:?}: {e}"))?;
                if value.is_nan() || value <= 1.0 {
                    return Err(format!("k must exceed 1, got {value}"));
                }
                ks.push(value);
            }
            let thetas: Vec<f64> = (0..*samples)
                .map(|i| i as f64 / (*samples - 1) as f64 * std::f64::consts::TAU)
                .collect();
            match cli.format {
                Format::Csv => {
                    let mut out = String::from("k,theta,cos_eps,neg_sin_eps\n");
                    for &kv in &ks {
                        for &theta in &thetas {
                            let (ce, se) = angle_from_k(kv, theta);
                            out.push_str(&format!(
                                "{},{},{},{}\n",
                                fmt17(kv),
                                fmt17(theta),
                                fmt17(ce),
                                fmt17(-se)
                            ));
                        }
                    }
                    print!("{out}");
                }
                Format::Json => {
                    let rows: Vec<Value> = ks
                        .iter()
                        .flat_map(|&kv| {
                            thetas.iter().map(move |&theta| {
                                let (ce, se) = angle_from_k(kv, theta);
                                json!({
                                    "k": kv,
                                    "theta": theta,
                                    "cos_eps": ce,
                                    "neg_sin_eps": -se,
                                })
                            })
                        })
                        .collect();
                    println!("{}", Value::Object(object(vec![("rows", json!(rows))])));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit { speed, sides } => {
            let cfg = OrbitConfig::new(*speed, *sides, c).map_err(|e| e.to_string())?;
            let result = total_precession(&cfg).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                object(vec![
                    ("eps_per_corner", json!(result.eps_per_corner)),
                    ("total", json!(result.total)),
                    ("limit", json!(result.limit)),
                    ("omega_ratio", json!(result.omega_ratio)),
                    ("gap", json!((result.total - result.limit).abs())),
                ]),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::BoostCheck { u, v } => {
            let u = parse_ball(u, c)?;
            let v = parse_ball(v, c)?;
            let (left, right) = boost_composition_check(&u, &v).map_err(|e| e.to_string())?;
            let pass = left <= cli.tol && right <= cli.tol;
            emit(
                cli.format,
                object(vec![
                    ("left_residual", json!(left)),
                    ("right_residual", json!(right)),
                    ("pass", json!(pass)),
                ]),
            );
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VIOLATION)
            })
        }
        Command::Audit { samples, max_speed } => {
            if *samples == 0 {
                return Err("--samples must be at least 1".into());
            }
            if max_speed.is_nan() || *max_speed <= 0.0 || *max_speed >= c {
                return Err(format!("--max-speed must lie strictly in (0, {c})"));
            }
            let report = full_audit(*samples, cli.seed, *max_speed, c, cli.tol);
            match cli.format {
                Format::Json => {
                    let rows: Vec<Value> = report
                        .rows
                        .iter()
                        .map(|r| {
                            json!({
                                "law": r.law,
                                "max_residual": r.max_residual,
                                "samples": r.samples,
                                "tol": r.tol,
                                "pass": r.pass(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        Value::Object(object(vec![
                            ("rows", json!(rows)),
                            ("all_pass", json!(report.all_pass())),
                        ]))
                    );
                }
                Format::Csv => {
                    let mut out = String::from("law,max_residual,samples,tol,pass\n");
                    for r in &report.rows {
                        out.push_str(&format!(
                            "{},{},{},{},{}\n",
                            r.law,
                            fmt17(r.max_residual),
                            r.samples,
                            fmt17(r.tol),
                            r.pass()
                        ));
                    }
                    print!("{out}");
                }
            }
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VIOLATION)
            })
        }
        Command::SignCheck {
            u,
            theta,
            ratio,
            w,
            allow_degenerate,
        } => {
            let u = parse_ball(u, c)?;
            let w = match w {
                Some(text) => parse_ball(text, c)?,
                None => BallVec::from_array(vec3::scale(c, DEFAULT_PROBE), c)
                    .map_err(|e| e.to_string())?,
            };
            let report = sign_check(&u, *theta, *ratio, &w).map_err(|e| e.to_string())?;
            if report.opposite_signs.is_none() && !allow_degenerate {
                return Err(format!(
                    "sin theta vanishes at theta = {theta}; the sign verdict is undefined \
                     (pass --allow-degenerate to accept)"
                ));
            }
            let pass = report.residual <= cli.tol && report.opposite_signs != Some(false);
            emit(
                cli.format,
                object(vec![
                    ("theta", json!(report.theta)),
                    ("epsilon", json!(report.epsilon)),
                    ("residual", json!(report.residual)),
                    ("opposite_signs", json!(report.opposite_signs)),
                    ("pass", json!(pass)),
                ]),
            );
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VIOLATION)
            })
        }
        Command::Midpoint { a, b } => {
            let a = parse_ball(a, c)?;
            let b = parse_ball(b, c)?;
            let direct = gyromidpoint(&a, &b).map_err(|e| e.to_string())?;
            let dual = gyromidpoint_coadd(&a, &b).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                object(vec![
                    ("midpoint", vec_value(direct.components())),
                    ("via_coaddition", vec_value(dual.components())),
                    (
                        "agreement",
                        json!(vec3::max_abs_diff(direct.components(), dual.components())),
                    ),
                ]),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Defect { u, v, w } => {
            let u = parse_ball(u, c)?;
            let v = parse_ball(v, c)?;
            let w = parse_ball(w, c)?;
            let tri = GyroTriangle::new(u, v, w).map_err(|e| e.to_string())?;
            let defect = tri.defect().map_err(|e| e.to_string())?;
            let gammas = tri.side_gammas();
            emit(
                cli.format,
                object(vec![
                    ("defect", json!(defect)),
                    ("side_gammas", json!([gammas[0], gammas[1], gammas[2]])),
                ]),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Metric { x } => {
            let point = parse_vec(x)?;
            if point[2] != 0.0 {
                return Err("metric point must be planar: x1,x2".into());
            }
            let m = metric_tensor(point[0], point[1], c).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                object(vec![
                    ("e", json!(m.e)),
                    ("f", json!(m.f)),
                    ("g", json!(m.g)),
                    ("determinant", json!(m.determinant())),
                ]),
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
