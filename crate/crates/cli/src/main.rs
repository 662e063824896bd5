//! Command-line front end: list the identity registry, run seeded
//! verification sweeps in numeric, exact, or finite-difference mode, and
//! evaluate the underlying special functions directly.
//!
//! Exit status: 0 when every evaluated sample passed, 1 when any sample
//! failed, 2 on usage or configuration errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use combid::identities::{
    build_registry, find, sweep, DomainOverride, EvalRecord, IdentitySpec, Mode, PowerConvention,
    Status, SweepConfig, SweepReport, ValueRepr,
};
use combid::specfun::{self, c64, ComplexScalar};
use combid::telescope::{self, FactorSystem};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "combid",
    about = "Verify combinatorial identities by seeded numeric sweeps, exact rational evaluation, and finite differences",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the registered identities with their symbols and modes.
    List,
    /// Run verification sweeps and write one record per sample.
    Verify(VerifyArgs),
    /// Evaluate a single special function and print the value.
    Eval(EvalArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity selector; repeatable. Accepts the full id, an alias, or an
    /// eq-number prefix (for example "eq08").
    #[arg(long = "id")]
    ids: Vec<String>,
    /// Select every registered identity.
    #[arg(long, conflicts_with = "ids")]
    all: bool,
    #[arg(long, value_enum, default_value_t = ModeArg::Numeric)]
    mode: ModeArg,
    /// Samples per identity sweep.
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    /// Sweep seed; defaults to $COMBID_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Pass tolerance on the relative error. Defaults: 1e-8 (numeric and
    /// exact modes), 1e-5 (finite differences).
    #[arg(long)]
    tolerance: Option<f64>,
    /// Write per-sample records to this file.
    #[arg(long)]
    report: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::JsonLines)]
    format: FormatArg,
    /// Exhaustively sweep n = 0..=N instead of sampling; only valid when
    /// every selected identity has n as its single symbol.
    #[arg(long = "n-max")]
    n_max: Option<u64>,
    /// Override a symbol domain: SYM=lo:hi for integer symbols,
    /// SYM=re0:re1,im0:im1 for complex symbols. Repeatable.
    #[arg(long = "domain")]
    domains: Vec<String>,
    /// Binomial-power convention for numeric mode. The factored convention
    /// is asserted; the principal convention is observational.
    #[arg(long, value_enum, default_value_t = ConventionArg::Factored)]
    convention: ConventionArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Numeric,
    Exact,
    Fd,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    #[value(name = "json-lines")]
    JsonLines,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Factored,
    Principal,
}

#[derive(Args)]
struct EvalArgs {
    /// gamma, binomial, harmonic, genharmonic, fallingproduct, powerdiff,
    /// or proddiff. Complex arguments are written "re,im".
    function: String,
    /// Positional arguments of the chosen function.
    args: Vec<String>,
    /// proddiff: the x point.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// proddiff: the y point.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// proddiff: offsets z_k (space-separated list; use --z=-1,0 for values
    /// with a leading minus).
    #[arg(long, num_args = 1..)]
    z: Vec<String>,
    /// proddiff: exponents w_k (same syntax as --z).
    #[arg(long, num_args = 1..)]
    w: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => cmd_list(),
        Command::Verify(args) => cmd_verify(args),
        Command::Eval(args) => cmd_eval(args),
    }
}

/// Write a line to stdout, exiting quietly if the reader went away.
fn emit(line: std::fmt::Arguments) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if writeln!(lock, "{line}").is_err() {
        std::process::exit(0);
    }
}

macro_rules! out {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

fn cmd_list() -> ExitCode {
    out!("{:<22} {:<14} {:<18} formula", "id", "modes", "symbols");
    for spec in build_registry() {
        let modes: Vec<&str> = spec.modes.iter().map(|m| m.name()).collect();
        let symbols: Vec<&str> = spec.symbols.iter().map(|s| s.name).collect();
        out!(
            "{:<22} {:<14} {:<18} {}",
            spec.id,
            modes.join(","),
            symbols.join(","),
            spec.formula
        );
    }
    ExitCode::SUCCESS
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_domain_override(raw: &str) -> Result<(String, DomainOverride), String> {
    let (sym, body) = raw
        .split_once('=')
        .ok_or_else(|| format!("domain override '{raw}' is not SYM=range"))?;
    let parse = |s: &str| -> Result<f64, String> {
        s.parse::<f64>()
            .map_err(|_| format!("bad number '{s}' in domain override '{raw}'"))
    };
    if let Some((re_part, im_part)) = body.split_once(',') {
        let (r0, r1) = re_part
            .split_once(':')
            .ok_or_else(|| format!("bad real range in '{raw}'"))?;
        let (i0, i1) = im_part
            .split_once(':')
            .ok_or_else(|| format!("bad imaginary range in '{raw}'"))?;
        Ok((
            sym.to_string(),
            DomainOverride::Complex(parse(r0)?, parse(r1)?, parse(i0)?, parse(i1)?),
        ))
    } else {
        let (lo, hi) = body
            .split_once(':')
            .ok_or_else(|| format!("bad range in '{raw}'"))?;
        let lo: i64 = lo
            .parse()
            .map_err(|_| format!("bad integer '{lo}' in '{raw}'"))?;
        let hi: i64 = hi
            .parse()
            .map_err(|_| format!("bad integer '{hi}' in '{raw}'"))?;
        Ok((sym.to_string(), DomainOverride::Int(lo, hi)))
    }
}

fn mode_default_tolerance(mode: Mode) -> f64 {
    match mode {
        Mode::Fd => 1e-5,
        _ => 1e-8,
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if args.samples == 0 {
        return usage_error("--samples must be positive");
    }
    let specs: Vec<&'static IdentitySpec> = if args.all {
        build_registry().iter().collect()
    } else {
        if args.ids.is_empty() {
            return usage_error("select identities with --id or --all");
        }
        let mut out = Vec::new();
        for sel in &args.ids {
            match find(sel) {
                Some(spec) => {
                    if !out.iter().any(|s: &&IdentitySpec| s.id == spec.id) {
                        out.push(spec);
                    }
                }
                None => return usage_error(&format!("unknown identity '{sel}'")),
            }
        }
        out
    };

    if args.n_max.is_some() {
        if let Some(bad) = specs.iter().find(|s| !s.single_n()) {
            return usage_error(&format!(
                "--n-max applies only to single-symbol sweeps; '{}' has other symbols",
                bad.id
            ));
        }
    }

    let mut overrides = Vec::new();
    for raw in &args.domains {
        match parse_domain_override(raw) {
            Ok(ov) => {
                if !specs
                    .iter()
                    .any(|s| s.symbols.iter().any(|sym| sym.name == ov.0))
                {
                    return usage_error(&format!(
                        "domain override symbol '{}' not present in any selected identity",
                        ov.0
                    ));
                }
                overrides.push(ov);
            }
            Err(msg) => return usage_error(&msg),
        }
    }

    let seed = match args.seed {
        Some(s) => s,
        None => match std::env::var("COMBID_SEED") {
            Ok(v) => match v.parse() {
                Ok(s) => s,
                Err(_) => return usage_error("COMBID_SEED is not a 64-bit unsigned integer"),
            },
            Err(_) => 0,
        },
    };

    let modes: Vec<Mode> = match args.mode {
        ModeArg::Numeric => vec![Mode::Numeric],
        ModeArg::Exact => vec![Mode::Exact],
        ModeArg::Fd => vec![Mode::Fd],
        ModeArg::All => vec![Mode::Numeric, Mode::Exact, Mode::Fd],
    };
    let convention = match args.convention {
        ConventionArg::Factored => PowerConvention::Factored,
        ConventionArg::Principal => PowerConvention::Principal,
    };

    let mut reports: Vec<SweepReport> = Vec::new();
    let mut unsupported: Vec<(String, Mode)> = Vec::new();
    let mut all_records: Vec<EvalRecord> = Vec::new();
    for spec in &specs {
        for &mode in &modes {
            if !spec.supports(mode) {
                if args.mode != ModeArg::All {
                    unsupported.push((spec.id.to_string(), mode));
                }
                continue;
            }
            let cfg = SweepConfig {
                samples: args.samples,
                seed,
                tolerance: args
                    .tolerance
                    .unwrap_or_else(|| mode_default_tolerance(mode)),
                mode,
                convention,
                exhaustive_n: args.n_max,
                overrides: overrides.clone(),
            };
            let (report, records) = sweep(spec, &cfg);
            reports.push(report);
            all_records.extend(records);
        }
    }

    if let Some(path) = &args.report {
        let mut buf = Vec::new();
        match args.format {
            FormatArg::JsonLines => {
                for rec in &all_records {
                    match serde_json::to_string(rec) {
                        Ok(line) => {
                            buf.extend_from_slice(line.as_bytes());
                            buf.push(b'\n');
                        }
                        Err(e) => return usage_error(&format!("serialization failed: {e}")),
                    }
                }
            }
            FormatArg::Csv => {
                buf.extend_from_slice(csv_header().as_bytes());
                for rec in &all_records {
                    buf.extend_from_slice(csv_line(rec).as_bytes());
                }
            }
        }
        if let Err(e) = std::fs::write(path, &buf) {
            return usage_error(&format!("cannot write report {}: {e}", path.display()));
        }
    }

    out!(
        "{:<22} {:<8} {:>9} {:>9} {:>7} {:>7} {:>8} {:>12}",
        "id",
        "mode",
        "requested",
        "evaluated",
        "passed",
        "failed",
        "skipped",
        "max_rel_err"
    );
    for r in &reports {
        out!(
            "{:<22} {:<8} {:>9} {:>9} {:>7} {:>7} {:>8} {:>12.3e}",
            r.id,
            r.mode.name(),
            r.requested,
            r.evaluated,
            r.passed,
            r.failed,
            r.skipped(),
            r.max_rel_err
        );
    }
    for (id, mode) in &unsupported {
        out!("{:<22} {:<8} skipped (mode unsupported)", id, mode.name());
    }
    let failed: u64 = reports.iter().map(|r| r.failed).sum();
    if failed > 0 {
        for r in reports.iter().filter(|r| r.failed > 0) {
            if let Some(w) = &r.worst_fail {
                eprintln!("FAIL {}: sample {} rel_err {:?}", r.id, w.sample, w.rel_err);
            }
        }
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn csv_header() -> String {
    "id,sample,mode,status,assignment,lhs,rhs,abs_err,rel_err,condition,note\n".to_string()
}

/// Complex wire format "re+imi" with 17 significant digits.
fn csv_complex(re: f64, im: f64) -> String {
    if im.is_sign_negative() {
        format!("{:.16e}-{:.16e}i", re, -im)
    } else {
        format!("{:.16e}+{:.16e}i", re, im)
    }
}

fn csv_value(v: &ValueRepr) -> String {
    match v {
        ValueRepr::Int { int } => int.to_string(),
        ValueRepr::Complex { re, im } => csv_complex(*re, *im),
        ValueRepr::Rational { rational } => rational.clone(),
    }
}

fn csv_opt_f64(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.16e}")).unwrap_or_default()
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::SkippedSingular => "skipped_singular",
        Status::SkippedIllConditioned => "skipped_ill_conditioned",
        Status::SkippedNotExactCapable => "skipped_not_exact_capable",
    }
}

fn csv_line(rec: &EvalRecord) -> String {
    let assignment: Vec<String> = rec
        .assignment
        .iter()
        .map(|e| format!("{}={}", e.symbol, csv_value(&e.value)))
        .collect();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}\n",
        rec.id,
        rec.sample,
        rec.mode.name(),
        status_name(rec.status),
        assignment.join(";"),
        rec.lhs.as_ref().map(csv_value).unwrap_or_default(),
        rec.rhs.as_ref().map(csv_value).unwrap_or_default(),
        csv_opt_f64(rec.abs_err),
        csv_opt_f64(rec.rel_err),
        csv_opt_f64(rec.condition),
        rec.note.clone().unwrap_or_default().replace(',', ";"),
    )
}

fn parse_complex(s: &str) -> Result<ComplexScalar, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("complex argument '{s}' must be written re,im"))?;
    let re: f64 = re
        .parse()
        .map_err(|_| format!("bad real part '{re}' in '{s}'"))?;
    let im: f64 = im
        .parse()
        .map_err(|_| format!("bad imaginary part '{im}' in '{s}'"))?;
    Ok(c64(re, im))
}

fn fmt_complex(z: ComplexScalar) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn cmd_eval(args: EvalArgs) -> ExitCode {
    match eval_dispatch(&args) {
        Ok(lines) => {
            for line in lines {
                out!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(EvalFailure::Usage(msg)) => usage_error(&msg),
        Err(EvalFailure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

enum EvalFailure {
    Usage(String),
    Domain(combid::specfun::SpecFunError),
}

impl From<combid::specfun::SpecFunError> for EvalFailure {
    fn from(e: combid::specfun::SpecFunError) -> Self {
        EvalFailure::Domain(e)
    }
}

fn positional<'a>(args: &'a EvalArgs, n: usize, what: &str) -> Result<&'a [String], EvalFailure> {
    if args.args.len() != n {
        return Err(EvalFailure::Usage(format!(
            "{} takes {} argument(s): {}",
            args.function, n, what
        )));
    }
    Ok(&args.args)
}

fn parse_c(s: &str) -> Result<ComplexScalar, EvalFailure> {
    parse_complex(s).map_err(EvalFailure::Usage)
}

fn parse_int(s: &str, what: &str) -> Result<i64, EvalFailure> {
    s.parse()
        .map_err(|_| EvalFailure::Usage(format!("bad integer '{s}' for {what}")))
}

fn eval_dispatch(args: &EvalArgs) -> Result<Vec<String>, EvalFailure> {
    match args.function.as_str() {
        "gamma" => {
            let a = positional(args, 1, "s (complex re,im)")?;
            Ok(vec![fmt_complex(specfun::gamma(parse_c(&a[0])?)?)])
        }
        "loggamma" => {
            let a = positional(args, 1, "s (complex re,im)")?;
            Ok(vec![fmt_complex(specfun::log_gamma(parse_c(&a[0])?)?)])
        }
        "binomial" => {
            let a = positional(args, 2, "x y (complex re,im)")?;
            Ok(vec![fmt_complex(specfun::binomial(
                parse_c(&a[0])?,
                parse_c(&a[1])?,
            )?)])
        }
        "harmonic" => {
            let a = positional(args, 1, "n (nonnegative integer)")?;
            let n = parse_int(&a[0], "n")?;
            if n < 0 {
                return Err(EvalFailure::Usage("harmonic needs n >= 0".into()));
            }
            Ok(vec![format!("{}", specfun::harmonic(n as u64))])
        }
        "genharmonic" => {
            let a = positional(args, 3, "c n m (complex, integer, complex)")?;
            let c = parse_c(&a[0])?;
            let n = parse_int(&a[1], "n")?;
            if n < 0 {
                return Err(EvalFailure::Usage("genharmonic needs n >= 0".into()));
            }
            let m = parse_c(&a[2])?;
            Ok(vec![fmt_complex(specfun::gen_harmonic(c, n as u64, m)?)])
        }
        "fallingproduct" => {
            let a = positional(args, 3, "s a b (complex, integer, integer)")?;
            let s = parse_c(&a[0])?;
            let lo = parse_int(&a[1], "a")?;
            let hi = parse_int(&a[2], "b")?;
            Ok(vec![fmt_complex(specfun::falling_product(s, lo, hi)?)])
        }
        "powerdiff" => {
            let a = positional(args, 3, "x y n (complex, complex, nonnegative integer)")?;
            let x = parse_c(&a[0])?;
            let y = parse_c(&a[1])?;
            let n = parse_int(&a[2], "n")?;
            if n < 0 {
                return Err(EvalFailure::Usage("powerdiff needs n >= 0".into()));
            }
            let (lhs, rhs) = telescope::power_difference(x, y, n as u64);
            let rel = (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(f64::MIN_POSITIVE);
            Ok(vec![
                format!("lhs {}", fmt_complex(lhs)),
                format!("rhs {}", fmt_complex(rhs)),
                format!("reldiff {rel}"),
            ])
        }
        "proddiff" => {
            if !args.args.is_empty() {
                return Err(EvalFailure::Usage(
                    "proddiff takes --x --y --z ... --w ... flags".into(),
                ));
            }
            let x = parse_c(args.x.as_deref().ok_or_else(|| {
                EvalFailure::Usage("proddiff needs --x".into())
            })?)?;
            let y = parse_c(args.y.as_deref().ok_or_else(|| {
                EvalFailure::Usage("proddiff needs --y".into())
            })?)?;
            let z: Result<Vec<_>, _> = args.z.iter().map(|s| parse_c(s)).collect();
            let w: Result<Vec<_>, _> = args.w.iter().map(|s| parse_c(s)).collect();
            let f = FactorSystem::new(x, y, z?, w?)
                .map_err(|e| EvalFailure::Usage(e.to_string()))?;
            let e = telescope::evaluate(&f)?;
            let rel =
                (e.lhs - e.rhs).norm() / e.lhs.norm().max(e.rhs.norm()).max(f64::MIN_POSITIVE);
            Ok(vec![
                format!("lhs {}", fmt_complex(e.lhs)),
                format!("rhs {}", fmt_complex(e.rhs)),
                format!("reldiff {rel}"),
            ])
        }
        other => Err(EvalFailure::Usage(format!(
            "unknown function '{other}'; expected gamma, loggamma, binomial, harmonic, genharmonic, fallingproduct, powerdiff, or proddiff"
        ))),
    }
}
