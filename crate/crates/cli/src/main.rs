//! `bohr` — compute disk Bohr radii, reproduce the root tables, verify the
//! sharp refined inequality, and evaluate the underlying special functions.
//!
//! Output is byte-deterministic for a fixed command line: JSON (default,
//! `schema: 1`) or CSV, to stdout or to `--output`.
//!
//! Exit codes: 0 success / verification passed; 1 usage or parameter error;
//! 2 verification failed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bohr_core::phi::PhiFamily;
use bohr_core::radius::{
    build_ph0_equation, build_wh0_equation, classical_radius, solve_radius, table_generate,
    ClassicalKind, RootResult, TableId,
};
use bohr_core::series::{moebius_series, MoebiusPart};
use bohr_core::specfun::{digamma, gauss_2f1, h_alpha, lerch_phi, lerch_phi_via_digamma, PhiArgs};
use bohr_core::verify::{
    sharpness_probe, verify_harmonic, verify_refined_bound, HarmonicClassSpec, VerificationReport,
};

const SCHEMA: u32 = 1;
const DEFAULT_TOL: f64 = 1e-12;
const TOL_ENV: &str = "BOHR_TOL";

#[derive(Parser)]
#[command(
    name = "bohr",
    version,
    about = "Bohr radii, sharp-inequality verification, and root tables for disk maps"
)]
struct Cli {
    /// Tolerance for series tails and root residuals, in (0, 1e-3].
    /// Defaults to 1e-12; the BOHR_TOL environment variable overrides the
    /// default.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a radius equation for one class and weight family.
    Radius(RadiusArgs),
    /// Solve all 27 cells of one published table and diff against it.
    Table(TableArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// Probe sharpness of the area-ratio weight at the refined radius.
    Sharpness(SharpnessArgs),
    /// Evaluate one special function.
    Specfun(SpecfunArgs),
}

#[derive(Args)]
struct RadiusArgs {
    /// Class: ph0, wh0, or classical.
    #[arg(long)]
    class: String,
    /// M parameter of the ph0 class.
    #[arg(long = "M")]
    m: Option<f64>,
    /// alpha parameter of the wh0 class.
    #[arg(long)]
    alpha: Option<f64>,
    /// Weight family: power, poly:K, or shift:K.
    #[arg(long)]
    family: Option<String>,
    /// Classical equation kind: rogosinski1, rogosinski2, or hypergeometric.
    #[arg(long)]
    kind: Option<String>,
    /// Tail index N of the classical partial-sum equations.
    #[arg(long)]
    n: Option<u32>,
    /// Hypergeometric parameters.
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
}

#[derive(Args)]
struct TableArgs {
    /// Table id: 1 (n^k weights) or 2 ((n+1)^k weights).
    #[arg(long)]
    id: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim: thm22 (refined-inequality sweep) or harmonic (distance form).
    #[arg(long)]
    claim: String,
    /// Grid sizes of the thm22 sweep.
    #[arg(long, default_value_t = 99)]
    grid_a: usize,
    #[arg(long, default_value_t = 100)]
    grid_r: usize,
    /// Class of the harmonic claim: ph0 or wh0.
    #[arg(long)]
    class: Option<String>,
    #[arg(long = "M")]
    m: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    family: Option<String>,
    /// Radius at which the harmonic claim is checked.
    #[arg(long)]
    r: Option<f64>,
}

#[derive(Args)]
struct SharpnessArgs {
    /// Perturbation added to the sharp weight.
    #[arg(long)]
    epsilon: f64,
    /// Number of log-spaced samples of a near 1.
    #[arg(long, default_value_t = 200)]
    a_grid: usize,
}

#[derive(Args)]
struct SpecfunArgs {
    /// Function: digamma, lerch, lerch-digamma, h, 2f1, or moebius.
    #[arg(long = "fn")]
    function: String,
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    z: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    /// Series part of the moebius evaluator: b2, aterm, sr-over-pi, sr-ratio.
    #[arg(long)]
    part: Option<String>,
}

/// A usage-level failure: message plus the exit code to use.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 1,
        }
    }
}

impl From<bohr_core::Error> for Failure {
    fn from(e: bohr_core::Error) -> Self {
        Failure {
            message: e.to_string(),
            code: 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprintln!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(&cli) {
        Ok((report, code)) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &report) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{report}");
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn resolve_tol(cli: &Cli) -> Result<f64, Failure> {
    let tol = match cli.tol {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(raw) => raw
                .parse::<f64>()
                .map_err(|_| Failure::usage(format!("{TOL_ENV} is not a number: {raw:?}")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !(tol > 0.0 && tol <= 1e-3) {
        return Err(Failure::usage(format!(
            "tolerance must lie in (0, 1e-3], got {tol}"
        )));
    }
    Ok(tol)
}

fn parse_family(raw: &str) -> Result<PhiFamily, Failure> {
    if raw == "power" {
        return Ok(PhiFamily::power());
    }
    if let Some(v) = raw.strip_prefix("poly:") {
        let k: f64 = v
            .parse()
            .map_err(|_| Failure::usage(format!("bad family parameter in {raw:?}")))?;
        return Ok(PhiFamily::poly_weight(k)?);
    }
    if let Some(v) = raw.strip_prefix("shift:") {
        let k: f64 = v
            .parse()
            .map_err(|_| Failure::usage(format!("bad family parameter in {raw:?}")))?;
        return Ok(PhiFamily::shift_weight(k)?);
    }
    Err(Failure::usage(format!(
        "unknown family {raw:?}; expected power, poly:K, or shift:K"
    )))
}

fn require<T: Copy>(opt: Option<T>, flag: &str) -> Result<T, Failure> {
    opt.ok_or_else(|| Failure::usage(format!("missing required flag --{flag}")))
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let tol = resolve_tol(cli)?;
    match &cli.command {
        Command::Radius(args) => run_radius(cli, args, tol),
        Command::Table(args) => run_table(cli, args, tol),
        Command::Verify(args) => run_verify(cli, args, tol),
        Command::Sharpness(args) => run_sharpness(cli, args),
        Command::Specfun(args) => run_specfun(cli, args, tol),
    }
}

#[derive(Serialize)]
struct RadiusOut {
    schema: u32,
    command: &'static str,
    class: String,
    family: Option<String>,
    param: Option<f64>,
    root: f64,
    residual: f64,
    bracket: [f64; 2],
    iterations: usize,
    monotone_certificate: bool,
    sign_changes: usize,
}

fn run_radius(cli: &Cli, args: &RadiusArgs, tol: f64) -> Result<(String, u8), Failure> {
    let out = match args.class.as_str() {
        "ph0" | "wh0" => {
            let family = parse_family(args.family.as_deref().unwrap_or("power"))?;
            let (eq, param) = if args.class == "ph0" {
                let m = require(args.m, "M")?;
                (build_ph0_equation(&family, m)?, m)
            } else {
                let alpha = require(args.alpha, "alpha")?;
                (build_wh0_equation(&family, alpha)?, alpha)
            };
            let rr = solve_radius(&eq, tol)?;
            radius_out(&args.class, Some(family.description().to_string()), Some(param), &rr)
        }
        "classical" => {
            let kind = match args.kind.as_deref() {
                Some("rogosinski1") => ClassicalKind::Rogosinski1 {
                    n: require(args.n, "n")?,
                },
                Some("rogosinski2") => ClassicalKind::Rogosinski2 {
                    n: require(args.n, "n")?,
                },
                Some("hypergeometric") => ClassicalKind::Hypergeometric {
                    a: require(args.a, "a")?,
                    b: require(args.b, "b")?,
                    c: require(args.c, "c")?,
                    p: require(args.p, "p")?,
                },
                other => {
                    return Err(Failure::usage(format!(
                        "unknown classical kind {other:?}; expected rogosinski1, rogosinski2, or hypergeometric"
                    )))
                }
            };
            let root = classical_radius(kind)?;
            RadiusOut {
                schema: SCHEMA,
                command: "radius",
                class: "classical".to_string(),
                family: args.kind.clone(),
                param: None,
                root,
                residual: 0.0,
                bracket: [root, root],
                iterations: 0,
                monotone_certificate: true,
                sign_changes: 1,
            }
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown class {other:?}; expected ph0, wh0, or classical"
            )))
        }
    };
    let report = match cli.format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut s = String::from("class,family,param,root,residual\n");
            s.push_str(&format!(
                "{},{},{},{:.12},{:.3e}\n",
                out.class,
                out.family.as_deref().unwrap_or(""),
                out.param.map(|p| p.to_string()).unwrap_or_default(),
                out.root,
                out.residual
            ));
            s
        }
    };
    Ok((report, 0))
}

fn radius_out(
    class: &str,
    family: Option<String>,
    param: Option<f64>,
    rr: &RootResult,
) -> RadiusOut {
    RadiusOut {
        schema: SCHEMA,
        command: "radius",
        class: class.to_string(),
        family,
        param,
        root: rr.root,
        residual: rr.residual,
        bracket: [rr.bracket.0, rr.bracket.1],
        iterations: rr.iterations,
        monotone_certificate: rr.monotone_certificate,
        sign_changes: rr.sign_changes,
    }
}

#[derive(Serialize)]
struct TableRowOut {
    m: f64,
    weight: u32,
    root: Option<f64>,
    residual: Option<f64>,
    paper_value: String,
    abs_diff: Option<f64>,
    flag: String,
}

#[derive(Serialize)]
struct TableOut {
    schema: u32,
    command: &'static str,
    id: u32,
    rows: Vec<TableRowOut>,
    ordering_ok: bool,
    agree_count: usize,
}

fn run_table(cli: &Cli, args: &TableArgs, tol: f64) -> Result<(String, u8), Failure> {
    let id = match args.id {
        1 => TableId::One,
        2 => TableId::Two,
        other => return Err(Failure::usage(format!("table id must be 1 or 2, got {other}"))),
    };
    let report = table_generate(id, tol);
    let rows: Vec<TableRowOut> = report
        .cells
        .iter()
        .map(|cell| {
            let flag = match (&cell.result, cell.flagged) {
                (Err(e), _) => format!("error: {e}"),
                (Ok(_), true) => "mismatch".to_string(),
                (Ok(_), false) => "ok".to_string(),
            };
            TableRowOut {
                m: cell.m,
                weight: cell.weight_exponent,
                root: cell.result.as_ref().ok().map(|r| r.root),
                residual: cell.result.as_ref().ok().map(|r| r.residual),
                paper_value: cell.published_str.to_string(),
                abs_diff: cell.abs_diff,
                flag,
            }
        })
        .collect();
    let out = TableOut {
        schema: SCHEMA,
        command: "table",
        id: args.id,
        rows,
        ordering_ok: report.ordering_violations.is_empty(),
        agree_count: report.agree_count,
    };
    let text = match cli.format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut s = String::from("M,weight,root,residual,paper_value,abs_diff,flag\n");
            for row in &out.rows {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    row.m,
                    row.weight,
                    row.root.map(|r| format!("{r:.10}")).unwrap_or_default(),
                    row.residual.map(|r| format!("{r:.3e}")).unwrap_or_default(),
                    row.paper_value,
                    row.abs_diff.map(|d| format!("{d:.6}")).unwrap_or_default(),
                    row.flag
                ));
            }
            s
        }
    };
    Ok((text, 0))
}

#[derive(Serialize)]
struct WitnessOut {
    params: Vec<(String, f64)>,
    value: f64,
}

#[derive(Serialize)]
struct VerifyOut {
    schema: u32,
    command: &'static str,
    claim: String,
    passed: bool,
    worst_margin: f64,
    grid: String,
    witnesses: Vec<WitnessOut>,
}

fn verify_out(command: &'static str, claim: &str, report: &VerificationReport) -> VerifyOut {
    VerifyOut {
        schema: SCHEMA,
        command,
        claim: claim.to_string(),
        passed: report.passed,
        worst_margin: report.worst_margin,
        grid: report.grid.clone(),
        witnesses: report
            .witnesses
            .iter()
            .map(|w| WitnessOut {
                params: w.params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                value: w.value,
            })
            .collect(),
    }
}

fn render_verify(cli: &Cli, out: &VerifyOut) -> (String, u8) {
    let text = match cli.format {
        Format::Json => to_json(out),
        Format::Csv => {
            let mut s = String::from("claim,passed,worst_margin\n");
            s.push_str(&format!("{},{},{:e}\n", out.claim, out.passed, out.worst_margin));
            s
        }
    };
    let code = if out.passed { 0 } else { 2 };
    (text, code)
}

fn run_verify(cli: &Cli, args: &VerifyArgs, tol: f64) -> Result<(String, u8), Failure> {
    match args.claim.as_str() {
        "thm22" => {
            let report = verify_refined_bound(args.grid_a, args.grid_r, tol)?;
            Ok(render_verify(cli, &verify_out("verify", "thm22", &report)))
        }
        "harmonic" => {
            let family = parse_family(args.family.as_deref().unwrap_or("power"))?;
            let class = match args.class.as_deref() {
                Some("ph0") => HarmonicClassSpec::Ph0 {
                    m: require(args.m, "M")?,
                    family,
                },
                Some("wh0") => HarmonicClassSpec::Wh0 {
                    alpha: require(args.alpha, "alpha")?,
                    family,
                },
                other => {
                    return Err(Failure::usage(format!(
                        "harmonic claim needs --class ph0 or wh0, got {other:?}"
                    )))
                }
            };
            let r = require(args.r, "r")?;
            let report = verify_harmonic(&class, r, tol)?;
            let claim = report.claim_id.clone();
            Ok(render_verify(cli, &verify_out("verify", &claim, &report)))
        }
        other => Err(Failure::usage(format!(
            "unknown claim {other:?}; expected thm22 or harmonic"
        ))),
    }
}

fn run_sharpness(cli: &Cli, args: &SharpnessArgs) -> Result<(String, u8), Failure> {
    let report = sharpness_probe(args.epsilon, args.a_grid)?;
    Ok(render_verify(cli, &verify_out("sharpness", "sharpness", &report)))
}

#[derive(Serialize)]
struct SpecfunOut {
    schema: u32,
    command: &'static str,
    function: String,
    args: Vec<(String, f64)>,
    value: f64,
    tail_bound: Option<f64>,
    terms_used: Option<usize>,
}

fn run_specfun(cli: &Cli, args: &SpecfunArgs, tol: f64) -> Result<(String, u8), Failure> {
    let mut used: Vec<(String, f64)> = Vec::new();
    let mut push = |k: &str, v: f64| used.push((k.to_string(), v));
    let (value, tail, terms) = match args.function.as_str() {
        "digamma" => {
            let x = require(args.x, "x")?;
            push("x", x);
            (digamma(x)?, None, None)
        }
        "lerch" => {
            let z = require(args.z, "z")?;
            let a = require(args.a, "a")?;
            push("z", z);
            push("a", a);
            let v = lerch_phi(PhiArgs::new(z, a)?, tol)?;
            (v.value, Some(v.tail_bound), Some(v.terms_used))
        }
        "lerch-digamma" => {
            let a = require(args.a, "a")?;
            push("a", a);
            (lerch_phi_via_digamma(a)?, None, None)
        }
        "h" => {
            let alpha = require(args.alpha, "alpha")?;
            push("alpha", alpha);
            (h_alpha(alpha)?, None, None)
        }
        "2f1" => {
            let a = require(args.a, "a")?;
            let b = require(args.b, "b")?;
            let c = require(args.c, "c")?;
            let z = require(args.z, "z")?;
            push("a", a);
            push("b", b);
            push("c", c);
            push("z", z);
            let v = gauss_2f1(a, b, c, z, tol)?;
            (v.value, Some(v.tail_bound), Some(v.terms_used))
        }
        "moebius" => {
            let a = require(args.a, "a")?;
            let r = require(args.r, "r")?;
            push("a", a);
            push("r", r);
            let part = match args.part.as_deref() {
                Some("b2") => MoebiusPart::B2,
                Some("aterm") => MoebiusPart::ATerm,
                Some("sr-over-pi") => MoebiusPart::SrOverPi,
                Some("sr-ratio") => MoebiusPart::SrRatio,
                other => {
                    return Err(Failure::usage(format!(
                        "unknown part {other:?}; expected b2, aterm, sr-over-pi, or sr-ratio"
                    )))
                }
            };
            (moebius_series(a, r, part)?, None, None)
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown function {other:?}; expected digamma, lerch, lerch-digamma, h, 2f1, or moebius"
            )))
        }
    };
    let out = SpecfunOut {
        schema: SCHEMA,
        command: "specfun",
        function: args.function.clone(),
        args: used,
        value,
        tail_bound: tail,
        terms_used: terms,
    };
    let text = match cli.format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut s = String::from("function,value,tail_bound,terms_used\n");
            s.push_str(&format!(
                "{},{:e},{},{}\n",
                out.function,
                out.value,
                out.tail_bound.map(|t| format!("{t:e}")).unwrap_or_default(),
                out.terms_used.map(|t| t.to_string()).unwrap_or_default()
            ));
            s
        }
    };
    Ok((text, 0))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}
