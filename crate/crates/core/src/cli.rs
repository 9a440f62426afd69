//! Command-line front end.
//!
//! Results go to standard output as JSON (or as plain text with `--plain`).
//! Errors go to standard error as `{"error": {"code": ..., "message": ...}}`.
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::dedekind::rademacher_phi;
use crate::error::{Error, Result};
use crate::eta::{EtaEngine, VerificationReport};
use crate::fricke::{odd_prime, FrickeElement};
use crate::fricke_symbol::{phi_p, phi_p_geometric};
use crate::matrix::UnimodularMatrix;
use crate::paths::{decompose, endpoints, turns_from_endpoints, EdgeWord, Farey};
use crate::render::{render_svg, RenderOptions};
use crate::tridiag::TridiagonalSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment override for the default working precision.
pub const PRECISION_ENV: &str = "RADEMACHER_PRECISION";
const DEFAULT_PRECISION: usize = 50;

#[derive(Debug, Parser)]
#[command(name = "rademacher", version, about = "Rademacher symbols, Farey edge paths and eta transformation checks")]
struct Cli {
    /// Print plain text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rademacher symbol of an SL2(Z) matrix.
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Rademacher symbol Phi_p on Gamma0+(p).
    PhiP {
        #[command(flatten)]
        element: ElementArgs,
        /// Evaluate through traces and signatures of two edge paths.
        #[arg(long)]
        geometric: bool,
    },
    /// Word and endpoints of the based edge path of a matrix.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Endpoints of the based edge path of a word.
    Endpoints {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Turn integers from an endpoint list such as 1/0,0/1,1/2.
    Turns {
        #[arg(long, allow_hyphen_values = true)]
        endpoints: String,
    },
    /// Trace, signature and trace - 3 signature of a word's tridiagonal matrix.
    Km {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Residual of the eta transformation law for one matrix and point.
    VerifyEta {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Residual of the eta_p transformation law on Gamma0+(p).
    VerifyTheorem1 {
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// SVG drawing of the based edge path of a word.
    Render {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        x_min: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x_max: Option<String>,
        #[arg(long)]
        width: Option<u32>,
        #[arg(long)]
        height: Option<u32>,
        #[arg(long)]
        no_labels: bool,
    },
}

#[derive(Debug, Args)]
struct ElementArgs {
    /// Odd prime, used together with --matrix.
    #[arg(long)]
    p: Option<String>,
    /// Element of Gamma0(p) as a,b,c,d.
    #[arg(long, allow_hyphen_values = true, requires = "p", conflicts_with = "fricke")]
    matrix: Option<String>,
    /// Fricke coset element as p:alpha,beta,gamma,delta.
    #[arg(long, allow_hyphen_values = true)]
    fricke: Option<String>,
}

#[derive(Debug, Args)]
struct NumericArgs {
    /// Point of the upper half-plane as re,im.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    /// Working precision in decimal digits.
    #[arg(long)]
    precision: Option<usize>,
    /// Pass threshold on the residual; defaults to 10^-(P-15).
    #[arg(long)]
    tolerance: Option<String>,
}

impl ElementArgs {
    fn element(&self) -> Result<FrickeElement> {
        match (&self.fricke, &self.matrix, &self.p) {
            (Some(f), None, _) => f.parse(),
            (None, Some(m), Some(p)) => {
                let p: BigInt = p.parse().map_err(|_| Error::Parse {
                    what: "prime p",
                    input: p.clone(),
                })?;
                let p = odd_prime(&p)?;
                FrickeElement::gamma0(p, m.parse()?)
            }
            _ => Err(Error::Parse {
                what: "group element (give --p with --matrix, or --fricke)",
                input: String::new(),
            }),
        }
    }
}

/// Integers as JSON numbers when they fit in `i64`, as strings otherwise.
pub fn json_int(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

pub fn json_word(w: &EdgeWord) -> Value {
    Value::Array(w.exponents().iter().map(json_int).collect())
}

pub fn json_points(pts: &[Farey]) -> Value {
    Value::Array(pts.iter().map(|v| json!(v.to_string())).collect())
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let err = || Error::Parse {
        what: "rational number",
        input: s.to_string(),
    };
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d == BigInt::from(0) {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }
    // finite decimal such as -0.125
    let (int_part, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.bytes().any(|b| !b.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{int_part}{frac}");
    let n: BigInt = digits.parse().map_err(|_| err())?;
    Ok(BigRational::new(n, BigInt::from(10).pow(frac.len() as u32)))
}

fn default_precision() -> usize {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_PRECISION)
}

enum Output {
    Json(Value),
    /// A numeric check: exit status follows the pass flag.
    Check(Value, bool),
    Done,
}

fn report_json(r: &VerificationReport, passed: bool) -> Result<Value> {
    let mut v = serde_json::to_value(r.to_json()?).map_err(|e| Error::Numeric(e.to_string()))?;
    v["pass"] = json!(passed);
    Ok(v)
}

fn check(eng: &mut EtaEngine, numeric: &NumericArgs, run: impl FnOnce(&mut EtaEngine, &crate::hp::HPComplex) -> Result<VerificationReport>) -> Result<Output> {
    let z = eng.hp().parse_complex(&numeric.z)?;
    let report = run(eng, &z)?;
    let tol = match &numeric.tolerance {
        Some(t) => eng.hp().parse(t)?,
        None => {
            let digits = eng.precision().saturating_sub(15) as u32;
            eng.hp().pow10_neg(digits)
        }
    };
    let passed = report.passes_tolerance(&tol);
    Ok(Output::Check(report_json(&report, passed)?, passed))
}

fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Phi { matrix } => {
            let g: UnimodularMatrix = matrix.parse()?;
            Ok(Output::Json(json!({ "phi": json_int(&rademacher_phi(&g)) })))
        }
        Command::PhiP { element, geometric } => {
            let e = element.element()?;
            let v = if *geometric { phi_p_geometric(&e) } else { phi_p(&e) };
            Ok(Output::Json(json!({ "phi_p": v.to_string() })))
        }
        Command::Decompose { matrix } => {
            let g: UnimodularMatrix = matrix.parse()?;
            let w = decompose(&g);
            Ok(Output::Json(json!({
                "word": json_word(&w),
                "endpoints": json_points(&endpoints(&w)),
            })))
        }
        Command::Endpoints { word } => {
            let w: EdgeWord = word.parse()?;
            Ok(Output::Json(json!({ "endpoints": json_points(&endpoints(&w)) })))
        }
        Command::Turns { endpoints } => {
            let pts = endpoints
                .trim_start_matches('[')
                .trim_end_matches(']')
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.trim_matches('"').parse::<Farey>())
                .collect::<Result<Vec<_>>>()?;
            let w = turns_from_endpoints(&pts)?;
            Ok(Output::Json(json!({ "word": json_word(&w) })))
        }
        Command::Km { word } => {
            let w: EdgeWord = word.parse()?;
            let m = TridiagonalSpec::from_word(&w);
            let trace = m.trace();
            let signature = m.inertia().signature();
            let phi = &trace - BigInt::from(3 * signature);
            Ok(Output::Json(json!({
                "trace": json_int(&trace),
                "signature": signature,
                "phi": json_int(&phi),
            })))
        }
        Command::VerifyEta { matrix, numeric } => {
            let g: UnimodularMatrix = matrix.parse()?;
            let mut eng = EtaEngine::new(numeric.precision.unwrap_or_else(default_precision))?;
            check(&mut eng, numeric, |eng, z| eng.verify_eta_transform(&g, z))
        }
        Command::VerifyTheorem1 { element, numeric } => {
            let e = element.element()?;
            let mut eng = EtaEngine::new(numeric.precision.unwrap_or_else(default_precision))?;
            check(&mut eng, numeric, |eng, z| eng.verify_theorem1(&e, z))
        }
        Command::Render {
            word,
            out,
            x_min,
            x_max,
            width,
            height,
            no_labels,
        } => {
            let w: EdgeWord = word.parse()?;
            let mut opts = RenderOptions::fit(&w);
            if let Some(v) = x_min {
                opts.x_min = parse_rational(v)?;
            }
            if let Some(v) = x_max {
                opts.x_max = parse_rational(v)?;
            }
            if let Some(v) = width {
                opts.width_px = *v;
            }
            if let Some(v) = height {
                opts.height_px = *v;
            }
            opts.label_vertices = !no_labels;
            let svg = render_svg(&w, &opts)?;
            match out {
                Some(path) => {
                    std::fs::write(path, &svg).map_err(|e| Error::RenderOptions(format!(
                        "cannot write {}: {e}",
                        path.display()
                    )))?;
                    Ok(Output::Json(json!({ "out": path.display().to_string(), "bytes": svg.len() })))
                }
                None => {
                    // raw SVG on stdout
                    let _ = std::io::stdout().write_all(&svg);
                    Ok(Output::Done)
                }
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}: {}", plain(v)))
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(" "),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let v = json!({ "error": { "code": "usage", "message": text.trim_end() } });
                    let _ = writeln!(err, "{v}");
                    EXIT_USAGE
                }
            };
        }
    };
    let emit = |out: &mut dyn Write, v: &Value| {
        let text = if cli.plain { plain(v) } else { v.to_string() };
        let _ = writeln!(out, "{text}");
    };
    match execute(&cli.command) {
        Ok(Output::Json(v)) => {
            emit(out, &v);
            EXIT_OK
        }
        Ok(Output::Check(v, passed)) => {
            emit(out, &v);
            if passed {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            }
        }
        Ok(Output::Done) => EXIT_OK,
        Err(e) => {
            if cli.plain {
                let _ = writeln!(err, "error[{}]: {e}", e.code());
            } else {
                let v = json!({ "error": { "code": e.code(), "message": e.to_string() } });
                let _ = writeln!(err, "{v}");
            }
            if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_DOMAIN
            }
        }
    }
}
