//! `xicalc` — command-line front end for the special-function library and
//! its identity-verification suite.
//!
//! Four verbs: `eval` computes one function value, `verify` runs one
//! registered check or the whole registry, `scan` brackets the sign changes
//! of Ξ on the critical line, and `heat` evaluates the radial heat sum
//! (optionally with its PDE residual).
//!
//! Output contract: `json` and `csv` are deterministic — wall-clock fields
//! are zeroed so identical invocations are byte-identical; `human` keeps the
//! measured timings unless `--deterministic` is given. Exit codes: 0 when
//! every requested EXACT-mode check passed (calibrate-mode reports are
//! advisory), 1 when one failed, 2 for usage errors, 3 for numerical
//! failures or an output sink that cannot be written.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use xicalc::{
    bessel_i0, bessel_j, complex_gamma, heat_u, kummer_1f1, muntz_transform, run_check,
    run_suite, theta_psi, xi_completed, xi_critical_line, xi_zero_scan, zeta, BesselOrder,
    CheckId, CheckMode, CheckParams, CheckReport, EvalRequest, G1Kernel, GaussKernel,
    GaussPiKernel, KummerArgs, PhysParams, RScale, ReportValue, SuiteConfig, ThetaConvention,
};

const GRAMMAR: &str = "\
GRAMMAR
  xicalc eval <fn> --<param> <value>...
      fn in {Xi, xi, zeta, gamma, j0, j1, i0, 1f1, psi, h1, u, muntz}:
        Xi    --y Y                          capital Xi on the critical line
        xi    --re A [--im B]                completed zeta at s = A+Bi
        zeta  --re A [--im B]                zeta at s = A+Bi (s != 1)
        gamma --re A [--im B]                gamma function at A+Bi
        j0    --x X                          Bessel J0(X)
        j1    --x X                          Bessel J1(X)
        i0    --x X                          modified Bessel I0(X)
        1f1   --a-re A [--a-im B] --w-re W [--w-im V]
                                             confluent 1F1(a; 1; w)
        psi   --x X [--convention plain|pi]  Gaussian lattice sum over n >= 1
        h1    --y Y [--r R] [--t T]          damped Bessel tail series
                                             [default: R = 0.5i, T = 1]
        u     --r R [--t T] [--kappa K]      radial heat sum
                                             [default: T = 1, K = 1]
        muntz --y Y [--kernel gauss|gauss-pi|bessel] [--r R] [--t T]
                                             regularized lattice transform
                                             [default: kernel = gauss]
      eval accepts --format human|json      [default: human]
  xicalc verify <check_id|all> [--mode exact|calibrate] [--tol T]
         [--grid X1,X2,...] [--r R] [--t T] [--kappa K]
         [--format human|json|csv] [--out PATH] [--deterministic]
      check ids (registry order):
        eq_1_1 thm_1_1 thm_1_2 thm_1_2_r0 thm_1_3 asym_remark heat_pde
        bvp_i bvp_ii bessel_derivs parseval mellin_3_3 residue_3_5
        contour_3_6 reflect_3_7 beta_3_8 kummer_3_9 muntz_3_11 chain_3_12
      --r/--t/--kappa apply to a single check, not to `all`.
      defaults: per-check mode and tolerance from the registry; format human
  xicalc scan xi-zeros --y-max Y [--step H] [--out PATH]
      CSV columns index,y_lower,y_upper,y_mid   [default: H = 0.25]
  xicalc heat --r R --t T [--kappa K] [--residual]   [default: K = 1]

  Global: --config PATH reads a plain `key = value` file (one pair per line,
  `#` comments); command-line flags take precedence over file values.
  Scale arguments (--r) accept `0.5` (real) or `0.5i` (imaginary).

EXIT CODES
  0  every requested EXACT-mode check passed, or the evaluation succeeded
     (calibrate-mode reports are advisory and never fail the exit code)
  1  at least one EXACT-mode check failed
  2  usage error: nothing was evaluated
  3  numerical non-convergence, domain error, or output write failure";

#[derive(Parser)]
#[command(
    name = "xicalc",
    version,
    about = "Special-function evaluation and numerical identity verification",
    after_help = GRAMMAR,
    disable_help_subcommand = true
)]
struct Cli {
    /// Plain `key = value` config file; flags override file values.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one function at a point.
    Eval(EvalArgs),
    /// Run one identity check, or `all` for the full registry.
    Verify(VerifyArgs),
    /// Bracket the sign changes of Ξ on the critical line (target: xi-zeros).
    Scan(ScanArgs),
    /// Evaluate the radial heat sum, optionally with its PDE residual.
    Heat(HeatArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Function name: Xi xi zeta gamma j0 j1 i0 1f1 psi h1 u muntz.
    function: String,
    #[arg(long)]
    y: Option<f64>,
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    re: Option<f64>,
    #[arg(long)]
    im: Option<f64>,
    #[arg(long = "a-re")]
    a_re: Option<f64>,
    #[arg(long = "a-im")]
    a_im: Option<f64>,
    #[arg(long = "w-re")]
    w_re: Option<f64>,
    #[arg(long = "w-im")]
    w_im: Option<f64>,
    /// Length scale: `0.5` (real) or `0.5i` (imaginary).
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    t: Option<f64>,
    #[arg(long)]
    kappa: Option<f64>,
    /// Theta-sum convention: plain | pi.
    #[arg(long)]
    convention: Option<String>,
    /// Lattice kernel: gauss | gauss-pi | bessel.
    #[arg(long)]
    kernel: Option<String>,
    /// Output format: human | json.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// A registered check id, or `all`.
    target: String,
    /// Force a mode: exact | calibrate (default: the check's registry mode).
    #[arg(long)]
    mode: Option<String>,
    /// Tolerance override (default: the check's registry tolerance).
    #[arg(long)]
    tol: Option<f64>,
    /// Comma-separated sample-grid override, e.g. `-0.3,0,0.3`.
    #[arg(long)]
    grid: Option<String>,
    /// Length scale for single checks: `0.5` (real) or `0.5i` (imaginary).
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    t: Option<f64>,
    #[arg(long)]
    kappa: Option<f64>,
    /// Report format: human | json | csv (default: human).
    #[arg(long)]
    format: Option<String>,
    /// Write the report here atomically (temp file + rename) instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Zero wall-clock fields in human output too (json/csv always do).
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Scan target; only `xi-zeros` is defined.
    target: String,
    #[arg(long = "y-max")]
    y_max: Option<f64>,
    /// Scan step (default 0.25).
    #[arg(long)]
    step: Option<f64>,
    /// Write the CSV here atomically instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HeatArgs {
    /// Radial coordinate, >= 0 (> 0 with --residual).
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
    /// Diffusivity (default 1).
    #[arg(long)]
    kappa: Option<f64>,
    /// Also report |u_t − κ(u_rr + u_r/r)| at the point.
    #[arg(long)]
    residual: bool,
}

/// A failure that terminates the invocation, tagged with its exit code.
#[derive(Debug)]
enum Failure {
    /// Grammar or parameter-shape problem; nothing was evaluated. Exit 2.
    Usage(String),
    /// Evaluation or output-sink failure. Exit 3.
    Numerical(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Numerical(_) => 3,
        }
    }
}

impl From<xicalc::Error> for Failure {
    fn from(e: xicalc::Error) -> Self {
        Failure::Numerical(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version requests land here too; those exit 0.
            let is_usage = e.use_stderr();
            let _ = e.print();
            if is_usage {
                eprintln!("\n{GRAMMAR}");
                return 2;
            }
            return 0;
        }
    };
    let config = match Config::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(f) => return report_failure(f),
    };
    let outcome = match cli.command {
        Cmd::Eval(args) => cmd_eval(&args, &config),
        Cmd::Verify(args) => cmd_verify(&args, &config),
        Cmd::Scan(args) => cmd_scan(&args, &config),
        Cmd::Heat(args) => cmd_heat(&args, &config),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => report_failure(f),
    }
}

fn report_failure(f: Failure) -> i32 {
    match &f {
        Failure::Usage(msg) => eprintln!("error: {msg}\n\n{GRAMMAR}"),
        Failure::Numerical(msg) => eprintln!("error: {msg}"),
    }
    f.exit_code()
}

// ---------------------------------------------------------------------------
// Config file and flag/file precedence
// ---------------------------------------------------------------------------

/// Key/value pairs from `--config`, consulted when a flag was not given.
struct Config(BTreeMap<String, String>);

impl Config {
    fn load(path: Option<&Path>) -> CliResult<Self> {
        let mut map = BTreeMap::new();
        if let Some(path) = path {
            let text = fs::read_to_string(path).map_err(|e| {
                Failure::Usage(format!("cannot read config {}: {e}", path.display()))
            })?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line.split_once('=').ok_or_else(|| {
                    Failure::Usage(format!(
                        "config {}:{}: expected `key = value`, got `{line}`",
                        path.display(),
                        lineno + 1
                    ))
                })?;
                map.insert(key.trim().to_string(), value.trim().to_string());
            }
        }
        Ok(Config(map))
    }

    /// Parsed value for `key`, or None when the file does not set it.
    fn get<T: FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        match self.0.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                Failure::Usage(format!("config key `{key}`: cannot parse `{raw}`"))
            }),
        }
    }
}

/// Flag value if given, else the config-file value, else None.
fn resolve<T: FromStr>(flag: Option<T>, config: &Config, key: &str) -> CliResult<Option<T>> {
    match flag {
        Some(v) => Ok(Some(v)),
        None => config.get(key),
    }
}

fn require<T>(value: Option<T>, what: &str) -> CliResult<T> {
    value.ok_or_else(|| Failure::Usage(format!("missing required parameter {what}")))
}

// ---------------------------------------------------------------------------
// Shared argument parsing
// ---------------------------------------------------------------------------

fn parse_rscale(raw: &str) -> CliResult<RScale> {
    let s = raw.trim();
    let (body, imaginary) = match s.strip_suffix(['i', 'I']) {
        Some(body) => (body, true),
        None => (s, false),
    };
    let m: f64 = body.trim().parse().map_err(|_| {
        Failure::Usage(format!("invalid scale `{raw}` (expected e.g. 0.5 or 0.5i)"))
    })?;
    Ok(if imaginary { RScale::Imaginary(m) } else { RScale::Real(m) })
}

fn parse_grid(raw: &str) -> CliResult<Vec<f64>> {
    raw.split(',')
        .map(|part| {
            part.trim().parse::<f64>().map_err(|_| {
                Failure::Usage(format!("invalid grid entry `{}` in `{raw}`", part.trim()))
            })
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Human,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "human" => Ok(OutputFormat::Human),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format `{other}` (human | json | csv)")),
        }
    }
}

fn parse_format(raw: Option<String>, config: &Config) -> CliResult<OutputFormat> {
    let merged = match raw {
        Some(v) => Some(v),
        None => config.0.get("format").cloned(),
    };
    match merged {
        None => Ok(OutputFormat::Human),
        Some(v) => v.parse().map_err(Failure::Usage),
    }
}

fn parse_mode(raw: Option<String>, config: &Config) -> CliResult<Option<CheckMode>> {
    let merged = match raw {
        Some(v) => Some(v),
        None => config.0.get("mode").cloned(),
    };
    merged
        .map(|v| {
            CheckMode::from_str(&v)
                .map_err(|_| Failure::Usage(format!("unknown mode `{v}` (exact | calibrate)")))
        })
        .transpose()
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

fn cmd_eval(args: &EvalArgs, config: &Config) -> CliResult<i32> {
    let format = parse_format(args.format.clone(), config)?;
    if format == OutputFormat::Csv {
        return Err(Failure::Usage(
            "eval emits a single value; --format csv applies to verify reports".into(),
        ));
    }
    reject_stray_flags(args)?;

    let req = EvalRequest::default();
    let value = match args.function.as_str() {
        "Xi" => {
            let y = require(resolve(args.y, config, "y")?, "--y")?;
            ReportValue::Real(xi_critical_line(y)?)
        }
        "xi" => complex_value(args, config, xi_completed)?,
        "zeta" => complex_value(args, config, |s| zeta(s, &req))?,
        "gamma" => complex_value(args, config, complex_gamma)?,
        "j0" => {
            let x = require(resolve(args.x, config, "x")?, "--x")?;
            ReportValue::Real(bessel_j(BesselOrder::Zero, x))
        }
        "j1" => {
            let x = require(resolve(args.x, config, "x")?, "--x")?;
            ReportValue::Real(bessel_j(BesselOrder::One, x))
        }
        "i0" => {
            let x = require(resolve(args.x, config, "x")?, "--x")?;
            ReportValue::Real(bessel_i0(x)?)
        }
        "1f1" => {
            let a = Complex64::new(
                require(resolve(args.a_re, config, "a-re")?, "--a-re")?,
                resolve(args.a_im, config, "a-im")?.unwrap_or(0.0),
            );
            let w = Complex64::new(
                require(resolve(args.w_re, config, "w-re")?, "--w-re")?,
                resolve(args.w_im, config, "w-im")?.unwrap_or(0.0),
            );
            complex_report(kummer_1f1(KummerArgs { a, w }, &req)?.value)
        }
        "psi" => {
            let x = require(resolve(args.x, config, "x")?, "--x")?;
            let convention = match resolve(args.convention.clone(), config, "convention")?
                .as_deref()
                .unwrap_or("plain")
            {
                "plain" => ThetaConvention::Plain,
                "pi" => ThetaConvention::Pi,
                other => {
                    return Err(Failure::Usage(format!(
                        "unknown convention `{other}` (plain | pi)"
                    )))
                }
            };
            ReportValue::Real(theta_psi(x, convention)?)
        }
        "h1" => {
            let y = require(resolve(args.y, config, "y")?, "--y")?;
            let p = PhysParams {
                x: 0.0,
                r: scale_or(args, config, RScale::Imaginary(0.5))?,
                t: resolve(args.t, config, "t")?.unwrap_or(1.0),
                kappa: 1.0,
            };
            ReportValue::Real(h1_value(y, &p)?)
        }
        "u" => {
            let r = require(eval_radius(args, config)?, "--r")?;
            let t = resolve(args.t, config, "t")?.unwrap_or(1.0);
            let kappa = resolve(args.kappa, config, "kappa")?.unwrap_or(1.0);
            ReportValue::Real(heat_u(r, t, kappa)?.value)
        }
        "muntz" => {
            let y = require(resolve(args.y, config, "y")?, "--y")?;
            let kernel = resolve(args.kernel.clone(), config, "kernel")?
                .unwrap_or_else(|| "gauss".to_string());
            let value = match kernel.as_str() {
                "gauss" => muntz_transform(&GaussKernel, y)?,
                "gauss-pi" => muntz_transform(&GaussPiKernel, y)?,
                "bessel" => {
                    let r = scale_or(args, config, RScale::Imaginary(0.5))?;
                    let t = resolve(args.t, config, "t")?.unwrap_or(1.0);
                    muntz_transform(&G1Kernel::new(r, t)?, y)?
                }
                other => {
                    return Err(Failure::Usage(format!(
                        "unknown kernel `{other}` (gauss | gauss-pi | bessel)"
                    )))
                }
            };
            ReportValue::Real(value)
        }
        other => {
            return Err(Failure::Usage(format!(
                "unknown function `{other}` (Xi xi zeta gamma j0 j1 i0 1f1 psi h1 u muntz)"
            )))
        }
    };

    let rendered = match format {
        OutputFormat::Human => format!("{value}\n"),
        OutputFormat::Json => {
            let obj = serde_json::json!({ "function": args.function, "value": value });
            format!("{}\n", serde_json::to_string_pretty(&obj).expect("value serializes"))
        }
        OutputFormat::Csv => unreachable!("rejected above"),
    };
    write_sink(None, &rendered)?;
    Ok(0)
}

/// `eval u` takes its radius through `--r`, which the clap surface shares
/// with the scale flag (a string, so `0.5i` parses for the other verbs).
fn eval_radius(args: &EvalArgs, config: &Config) -> CliResult<Option<f64>> {
    let merged = match args.r.clone() {
        Some(v) => Some(v),
        None => config.0.get("r").cloned(),
    };
    merged
        .map(|v| {
            v.parse::<f64>()
                .map_err(|_| Failure::Usage(format!("eval u needs a real radius, got `{v}`")))
        })
        .transpose()
}

fn scale_or(args: &EvalArgs, config: &Config, default: RScale) -> CliResult<RScale> {
    let merged = match args.r.clone() {
        Some(v) => Some(v),
        None => config.0.get("r").cloned(),
    };
    match merged {
        None => Ok(default),
        Some(v) => parse_rscale(&v),
    }
}

fn h1_value(y: f64, p: &PhysParams) -> CliResult<f64> {
    Ok(xicalc::h1(y, p)?.value)
}

fn complex_value(
    args: &EvalArgs,
    config: &Config,
    f: impl Fn(Complex64) -> xicalc::Result<Complex64>,
) -> CliResult<ReportValue> {
    let s = Complex64::new(
        require(resolve(args.re, config, "re")?, "--re")?,
        resolve(args.im, config, "im")?.unwrap_or(0.0),
    );
    Ok(complex_report(f(s)?))
}

fn complex_report(z: Complex64) -> ReportValue {
    if z.im == 0.0 {
        ReportValue::Real(z.re)
    } else {
        ReportValue::Complex(z)
    }
}

/// Reject explicitly given flags that the chosen function does not read;
/// config-file keys are a shared pool and are never rejected.
fn reject_stray_flags(args: &EvalArgs) -> CliResult<()> {
    let allowed: &[&str] = match args.function.as_str() {
        "Xi" => &["y"],
        "xi" | "zeta" | "gamma" => &["re", "im"],
        "j0" | "j1" | "i0" => &["x"],
        "1f1" => &["a-re", "a-im", "w-re", "w-im"],
        "psi" => &["x", "convention"],
        "h1" => &["y", "r", "t"],
        "u" => &["r", "t", "kappa"],
        "muntz" => &["y", "kernel", "r", "t"],
        _ => return Ok(()), // unknown function reports its own error
    };
    let given: &[(&str, bool)] = &[
        ("y", args.y.is_some()),
        ("x", args.x.is_some()),
        ("re", args.re.is_some()),
        ("im", args.im.is_some()),
        ("a-re", args.a_re.is_some()),
        ("a-im", args.a_im.is_some()),
        ("w-re", args.w_re.is_some()),
        ("w-im", args.w_im.is_some()),
        ("r", args.r.is_some()),
        ("t", args.t.is_some()),
        ("kappa", args.kappa.is_some()),
        ("convention", args.convention.is_some()),
        ("kernel", args.kernel.is_some()),
    ];
    for &(name, present) in given {
        if present && !allowed.contains(&name) {
            return Err(Failure::Usage(format!(
                "--{name} does not apply to `eval {}`",
                args.function
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: &VerifyArgs, config: &Config) -> CliResult<i32> {
    let format = parse_format(args.format.clone(), config)?;
    let mode = parse_mode(args.mode.clone(), config)?;
    let tol = resolve(args.tol, config, "tol")?;
    let grid = match resolve(args.grid.clone(), config, "grid")? {
        Some(raw) => Some(parse_grid(&raw)?),
        None => None,
    };
    let deterministic = args.deterministic
        || config.get::<bool>("deterministic")?.unwrap_or(false)
        || format != OutputFormat::Human;
    let out = match args.out.clone() {
        Some(p) => Some(p),
        None => config.0.get("out").map(PathBuf::from),
    };

    let reports: Vec<CheckReport>;
    let mut errata: Vec<String> = Vec::new();
    if args.target == "all" {
        if args.r.is_some() || args.t.is_some() || args.kappa.is_some() {
            return Err(Failure::Usage(
                "--r/--t/--kappa select parameters for a single check, not for `all`".into(),
            ));
        }
        let suite = run_suite(&SuiteConfig {
            checks: None,
            mode,
            tol,
            grid,
            deterministic,
        });
        errata = suite.errata.clone();
        if format == OutputFormat::Json {
            let rendered = format!(
                "{}\n",
                serde_json::to_string_pretty(&suite).expect("suite serializes")
            );
            write_sink(out.as_deref(), &rendered)?;
            return Ok(exit_for(&suite.reports));
        }
        reports = suite.reports;
    } else {
        let id = CheckId::from_str(&args.target).map_err(|_| {
            Failure::Usage(format!(
                "unknown check `{}`; valid ids: {} (or `all`)",
                args.target,
                CheckId::ALL.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(" ")
            ))
        })?;
        let params = CheckParams {
            r: args
                .r
                .clone()
                .or_else(|| config.0.get("r").cloned())
                .map(|v| parse_rscale(&v))
                .transpose()?,
            t: resolve(args.t, config, "t")?,
            kappa: resolve(args.kappa, config, "kappa")?,
            grid,
        };
        let mode = mode.unwrap_or_else(|| id.default_mode());
        let tol = tol.unwrap_or_else(|| id.default_tol());
        let mut report = run_check(id, &params, mode, tol)?;
        if deterministic {
            report.wall_ms = 0.0;
        }
        if let Some(e) = report.params.get("erratum").and_then(|v| v.as_str()) {
            errata.push(format!("{}: {e}", report.check_id));
        }
        if format == OutputFormat::Json {
            let rendered = format!(
                "{}\n",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            write_sink(out.as_deref(), &rendered)?;
            return Ok(exit_for(std::slice::from_ref(&report)));
        }
        reports = vec![report];
    }

    let rendered = match format {
        OutputFormat::Csv => render_csv(&reports),
        OutputFormat::Human => render_human(&reports, &errata),
        OutputFormat::Json => unreachable!("handled above"),
    };
    write_sink(out.as_deref(), &rendered)?;
    Ok(exit_for(&reports))
}

/// Exit-code rule: 0 iff every EXACT-mode report passed. Calibrate-mode
/// reports measure a constant; their spread verdict is advisory.
fn exit_for(reports: &[CheckReport]) -> i32 {
    let exact_ok = reports
        .iter()
        .filter(|r| r.params.get("mode").and_then(|m| m.as_str()) == Some("exact"))
        .all(|r| r.passed);
    if exact_ok {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

fn cmd_scan(args: &ScanArgs, config: &Config) -> CliResult<i32> {
    if args.target != "xi-zeros" {
        return Err(Failure::Usage(format!(
            "unknown scan target `{}`; only `xi-zeros` is defined",
            args.target
        )));
    }
    let y_max = require(resolve(args.y_max, config, "y-max")?, "--y-max")?;
    let step = resolve(args.step, config, "step")?.unwrap_or(0.25);
    let out = match args.out.clone() {
        Some(p) => Some(p),
        None => config.0.get("out").map(PathBuf::from),
    };
    let brackets = xi_zero_scan(y_max, step)?;
    let mut csv = String::from("index,y_lower,y_upper,y_mid\n");
    for b in &brackets {
        let _ = writeln!(csv, "{},{},{},{}", b.index, b.y_lower, b.y_upper, b.y_mid);
    }
    write_sink(out.as_deref(), &csv)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// heat
// ---------------------------------------------------------------------------

fn cmd_heat(args: &HeatArgs, config: &Config) -> CliResult<i32> {
    let r = require(resolve(args.r, config, "r")?, "--r")?;
    let t = require(resolve(args.t, config, "t")?, "--t")?;
    let kappa = resolve(args.kappa, config, "kappa")?.unwrap_or(1.0);
    let residual = args.residual || config.get::<bool>("residual")?.unwrap_or(false);

    let u = heat_u(r, t, kappa)?.value;
    let mut text = format!("u = {u}\n");
    if residual {
        if r <= 0.0 {
            return Err(Failure::Numerical(
                "the PDE residual divides by r (radial term); need r > 0".into(),
            ));
        }
        let h = 1e-3;
        let ur = |rr: f64| Ok(heat_u(rr, t, kappa)?.value);
        let ut = |tt: f64| Ok(heat_u(r, tt, kappa)?.value);
        let d1r = d1_richardson(&ur, r, h)?;
        let d2r = d2_richardson(&ur, r, h)?;
        let d1t = d1_richardson(&ut, t, h)?;
        let resid = (d1t - kappa * (d2r + d1r / r)).abs();
        let _ = writeln!(text, "residual = {resid}");
    }
    write_sink(None, &text)?;
    Ok(0)
}

/// O(h⁴) first derivative: Richardson over two central differences.
fn d1_richardson(
    f: &dyn Fn(f64) -> xicalc::Result<f64>,
    x: f64,
    h: f64,
) -> xicalc::Result<f64> {
    let central = |hh: f64| -> xicalc::Result<f64> { Ok((f(x + hh)? - f(x - hh)?) / (2.0 * hh)) };
    let coarse = central(h)?;
    let fine = central(0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// O(h⁴) second derivative, same ladder.
fn d2_richardson(
    f: &dyn Fn(f64) -> xicalc::Result<f64>,
    x: f64,
    h: f64,
) -> xicalc::Result<f64> {
    let central = |hh: f64| -> xicalc::Result<f64> {
        Ok((f(x + hh)? - 2.0 * f(x)? + f(x - hh)?) / (hh * hh))
    };
    let coarse = central(h)?;
    let fine = central(0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

const CSV_HEADER: &str = "check_id,params,lhs,rhs,abs_diff,rel_diff,ratio,tol,passed,\
calibration_constant,calibration_spread,wall_ms";

fn render_csv(reports: &[CheckReport]) -> String {
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for r in reports {
        let params = serde_json::to_string(&r.params).expect("params serialize");
        let ratio = r.ratio.as_ref().map(|v| v.to_string()).unwrap_or_default();
        let (constant, spread) = match &r.calibration {
            Some(c) => (c.constant.to_string(), c.spread.to_string()),
            None => (String::new(), String::new()),
        };
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.check_id,
            csv_quote(&params),
            csv_quote(&r.lhs.to_string()),
            csv_quote(&r.rhs.to_string()),
            r.abs_diff,
            r.rel_diff,
            csv_quote(&ratio),
            r.tol,
            r.passed,
            constant,
            spread,
            r.wall_ms,
        );
    }
    csv
}

/// RFC-4180 quoting: wrap fields containing commas, quotes, or newlines.
fn csv_quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn render_human(reports: &[CheckReport], errata: &[String]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<14} {:<10} {:>22} {:>22} {:>9} {:>9} {:>9} {:<6}",
        "CHECK", "MODE", "LHS", "RHS", "REL_DIFF", "TOL", "WALL_MS", "STATUS"
    );
    for r in reports {
        let mode = r
            .params
            .get("mode")
            .and_then(|m| m.as_str())
            .unwrap_or("?");
        let _ = writeln!(
            s,
            "{:<14} {:<10} {:>22} {:>22} {:>9.2e} {:>9.1e} {:>9.2} {:<6}",
            r.check_id.to_string(),
            mode,
            human_value(&r.lhs),
            human_value(&r.rhs),
            r.rel_diff,
            r.tol,
            r.wall_ms,
            if r.passed { "pass" } else { "FAIL" },
        );
        if let Some(c) = &r.calibration {
            let _ = writeln!(
                s,
                "{:>25} constant = {} (spread {:.2e})",
                "\u{21b3}", c.constant, c.spread
            );
        }
        if let Some(err) = r.params.get("error").and_then(|e| e.as_str()) {
            let _ = writeln!(s, "{:>25} error: {err}", "\u{21b3}");
        }
    }
    if !errata.is_empty() {
        let _ = writeln!(s, "\nerrata:");
        for e in errata {
            let _ = writeln!(s, "  {e}");
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let advisory = reports
        .iter()
        .filter(|r| r.params.get("mode").and_then(|m| m.as_str()) == Some("calibrate"))
        .count();
    let _ = writeln!(
        s,
        "\n{passed}/{} passed ({advisory} calibrate-mode advisory)",
        reports.len()
    );
    s
}

fn human_value(v: &ReportValue) -> String {
    match v {
        ReportValue::Real(x) => format!("{x:.9e}"),
        ReportValue::Complex(z) => format!("{:.2e}{:+.2e}i", z.re, z.im),
    }
}

// ---------------------------------------------------------------------------
// Output sinks
// ---------------------------------------------------------------------------

/// Write to stdout, or atomically (temp file + rename) to `path`.
fn write_sink(path: Option<&Path>, contents: &str) -> CliResult<()> {
    match path {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(contents.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Numerical(format!("stdout write failed: {e}")))
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let name = path
                .file_name()
                .and_then(|n| n.to_str())
                .unwrap_or("report");
            let tmp = dir.join(format!(".{name}.tmp.{}", std::process::id()));
            let write = fs::write(&tmp, contents).and_then(|_| fs::rename(&tmp, path));
            write.map_err(|e| {
                let _ = fs::remove_file(&tmp);
                Failure::Numerical(format!("cannot write {}: {e}", path.display()))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rscale_accepts_real_and_imaginary_suffix() {
        assert!(matches!(parse_rscale("0.5").unwrap(), RScale::Real(m) if m == 0.5));
        assert!(matches!(parse_rscale("0.5i").unwrap(), RScale::Imaginary(m) if m == 0.5));
        assert!(matches!(parse_rscale(" 2I ").unwrap(), RScale::Imaginary(m) if m == 2.0));
        assert!(parse_rscale("half").is_err());
    }

    #[test]
    fn grid_parses_comma_list() {
        assert_eq!(parse_grid("-0.3, 0,0.3").unwrap(), vec![-0.3, 0.0, 0.3]);
        assert!(parse_grid("1,,2").is_err());
    }

    #[test]
    fn csv_quoting_wraps_only_when_needed() {
        assert_eq!(csv_quote("plain"), "plain");
        assert_eq!(csv_quote("a,b"), "\"a,b\"");
        assert_eq!(csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn config_precedence_flag_wins() {
        let mut map = BTreeMap::new();
        map.insert("t".to_string(), "5.0".to_string());
        let cfg = Config(map);
        assert_eq!(resolve(Some(1.0f64), &cfg, "t").unwrap(), Some(1.0));
        assert_eq!(resolve(None::<f64>, &cfg, "t").unwrap(), Some(5.0));
        assert_eq!(resolve(None::<f64>, &cfg, "missing").unwrap(), None);
    }

    #[test]
    fn config_rejects_malformed_lines() {
        let dir = std::env::temp_dir();
        let path = dir.join(format!("xicalc_cfg_{}.txt", std::process::id()));
        fs::write(&path, "# comment\n t = 1.5 \nbroken line\n").unwrap();
        let err = Config::load(Some(&path)).err();
        fs::remove_file(&path).unwrap();
        assert!(matches!(err, Some(Failure::Usage(msg)) if msg.contains("broken line")));
    }

    #[test]
    fn exit_rule_ignores_calibrate_failures() {
        let mk = |mode: &str, passed: bool| CheckReport {
            check_id: CheckId::Parseval,
            params: serde_json::json!({ "mode": mode }),
            lhs: ReportValue::Real(0.0),
            rhs: ReportValue::Real(0.0),
            abs_diff: 0.0,
            rel_diff: 0.0,
            ratio: None,
            tol: 1e-8,
            passed,
            calibration: None,
            wall_ms: 0.0,
        };
        assert_eq!(exit_for(&[mk("exact", true), mk("calibrate", false)]), 0);
        assert_eq!(exit_for(&[mk("exact", false), mk("calibrate", true)]), 1);
        assert_eq!(exit_for(&[]), 0);
    }

    #[test]
    fn human_rendering_marks_failures_and_calibration() {
        let mut r = CheckReport {
            check_id: CheckId::Thm1_1,
            params: serde_json::json!({ "mode": "calibrate" }),
            lhs: ReportValue::Real(1.0),
            rhs: ReportValue::Real(2.0),
            abs_diff: 1.0,
            rel_diff: 0.5,
            ratio: Some(ReportValue::Real(0.5)),
            tol: 1e-5,
            passed: true,
            calibration: Some(xicalc::Calibration { constant: 1.77, spread: 1e-15 }),
            wall_ms: 3.25,
        };
        let text = render_human(std::slice::from_ref(&r), &[]);
        assert!(text.contains("thm_1_1"));
        assert!(text.contains("constant = 1.77"));
        assert!(text.contains("pass"));
        r.passed = false;
        let text = render_human(std::slice::from_ref(&r), &["thm_1_1: note".into()]);
        assert!(text.contains("FAIL"));
        assert!(text.contains("errata:"));
    }
}
