//! The `hm` command line.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::Coeff;
use crate::cfrac::PeriodicHFraction;
use crate::error::{Error, Result};
use crate::hfrac::{algorithm_trace, default_max_steps, hfraction_of_quadratic};
use crate::json;
use crate::qseries::{metallic_series, shifted_metallic_model};
use crate::verify::{
    conjecture_scan, hankel_sequence, modp_analysis, run_suite, CheckResult, HankelSource, ModpOutcome,
    PeriodicityVerdict, Suite,
};

/// Fallback series precision when `--prec` is not given.
pub const PRECISION_ENV: &str = "HM_DEFAULT_PRECISION";
const DEFAULT_PRECISION: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "hm", version, about = "q-deformed metallic numbers, their Hankel continued fractions and Hankel determinants")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Taylor coefficients of the q-metallic number.
    Series {
        #[arg(long)]
        n: usize,
        /// Number of coefficients [env: HM_DEFAULT_PRECISION, default 20].
        #[arg(long)]
        prec: Option<usize>,
    },
    /// H-fraction of the l-th shift, found by Algorithm Q.
    Hfrac {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        #[arg(long)]
        max_steps: Option<usize>,
        /// Print the first STEPS algorithm steps instead of the fraction.
        #[arg(long, value_name = "STEPS")]
        trace: Option<usize>,
    },
    /// Hankel determinants of the l-th shift.
    Hankel {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        /// Number of values [default: two (anti)periods].
        #[arg(long)]
        horizon: Option<usize>,
        /// formula, brute or both [default: both when l <= n + 1, else brute].
        #[arg(long)]
        source: Option<HankelSource>,
    },
    /// Run a verification suite.
    Verify {
        /// hfraction, periodicity, gale-robinson, contiguity, explicit,
        /// symmetries, baselines or all.
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// A single n or an inclusive range such as 1..6.
        #[arg(long, default_value = "1..6", value_parser = parse_range)]
        n: NRange,
        #[arg(long, default_value = "both")]
        source: HankelSource,
    },
    /// Eventual periods of the H-fraction and Hankel determinants mod p.
    Modp {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Exploratory scan of a shift beyond n + 1.
    Scan {
        #[arg(long)]
        n: usize,
        /// [default: n + 2]
        #[arg(long)]
        ell: Option<usize>,
        /// [default: 4n(n+1)]
        #[arg(long)]
        horizon: Option<usize>,
    },
}

/// Inclusive range of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub start: usize,
    pub end: usize,
}

impl NRange {
    pub fn values(self) -> Vec<usize> {
        (self.start..=self.end).collect()
    }
}

pub fn parse_range(s: &str) -> std::result::Result<NRange, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a number: {t:?}"));
    let (start, end) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if start == 0 || start > end {
        return Err(format!("invalid range {s:?}: need 1 <= start <= end"));
    }
    Ok(NRange { start, end })
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
}

/// Rendered output and the exit code it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: exit::OK }
    }
}

fn is_usage(e: &Error) -> bool {
    matches!(e, Error::InvalidArgument(_) | Error::NotPrime(_) | Error::InvalidModel(_))
}

/// Exit code for an error raised while running a command.
pub fn error_code(e: &Error) -> i32 {
    if is_usage(e) {
        exit::USAGE
    } else {
        exit::CHECK_FAILED
    }
}

fn default_precision() -> Result<usize> {
    match std::env::var(PRECISION_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{PRECISION_ENV} is not a number: {v:?}"))),
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

fn need_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    Ok(())
}

fn csv_cell(s: &str) -> String {
    if s.starts_with('-') || s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(cells: &[String]) -> String {
    let mut line = cells.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn no_csv(command: &str) -> Error {
    Error::InvalidArgument(format!("csv output is not available for {command}"))
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Output> {
    let f = cli.format;
    match &cli.command {
        Command::Series { n, prec } => cmd_series(*n, prec.map_or_else(default_precision, Ok)?, f),
        Command::Hfrac { n, ell, max_steps, trace } => cmd_hfrac(*n, *ell, *max_steps, *trace, f),
        Command::Hankel { n, ell, horizon, source } => cmd_hankel(*n, *ell, *horizon, *source, f),
        Command::Verify { suite, n, source } => cmd_verify(*suite, *n, *source, f),
        Command::Modp { n, ell, p, max_steps } => cmd_modp(*n, *ell, *p, *max_steps, f),
        Command::Scan { n, ell, horizon } => cmd_scan(*n, *ell, *horizon, f),
    }
}

pub fn cmd_series(n: usize, prec: usize, f: Format) -> Result<Output> {
    need_n(n)?;
    if prec == 0 {
        return Err(Error::InvalidArgument("precision must be >= 1".into()));
    }
    let s = metallic_series(n, prec)?;
    let body = match f {
        Format::Text => format!("{s}\n"),
        Format::Json => pretty(&json!({ "n": n, "series": json::series(&s) })),
        Format::Csv => {
            let mut out = csv_row(&["n".into(), "j".into(), "coeff".into()]);
            for (j, c) in s.coeffs().iter().enumerate() {
                out += &csv_row(&[n.to_string(), j.to_string(), c.to_string()]);
            }
            out
        }
    };
    Ok(Output::ok(body))
}

fn render_fraction<C: Coeff>(h: &PeriodicHFraction<C>) -> String {
    let level = |j: usize| format!("  {j}: ({}) / ({})\n", h.numerator(j).expect("level"), h.denominator(j).expect("level"));
    let mut out = String::from("head:\n");
    out += &level(0);
    if !h.preamble.is_empty() {
        out += "preamble:\n";
        for j in 1..h.offset() {
            out += &level(j);
        }
    }
    if h.is_finite() {
        out += "finite fraction\n";
    } else {
        let _ = writeln!(out, "cycle (offset {}, period {}):", h.offset(), h.period());
        for j in h.offset()..h.offset() + h.period() {
            out += &level(j);
        }
    }
    out
}

pub fn cmd_hfrac(n: usize, ell: usize, max_steps: Option<usize>, trace: Option<usize>, f: Format) -> Result<Output> {
    need_n(n)?;
    let model = shifted_metallic_model(n, ell)?.to_rational();
    if let Some(steps) = trace {
        let rows = algorithm_trace(&model, steps)?;
        let body = match f {
            Format::Json => pretty(&json!({ "n": n, "ell": ell, "trace": json::trace(&rows) })),
            Format::Text => rows
                .iter()
                .map(|r| {
                    format!(
                        "{}: k={} a={} D={} | A={} B={} C={}\n",
                        r.j, r.term.k, r.term.a, r.term.d, r.model.a, r.model.b, r.model.c
                    )
                })
                .collect(),
            Format::Csv => {
                let mut out = csv_row(&["j", "k", "a", "D", "A", "B", "C"].map(String::from));
                for r in &rows {
                    out += &csv_row(&[
                        r.j.to_string(),
                        r.term.k.to_string(),
                        r.term.a.to_string(),
                        r.term.d.to_string(),
                        r.model.a.to_string(),
                        r.model.b.to_string(),
                        r.model.c.to_string(),
                    ]);
                }
                out
            }
        };
        return Ok(Output::ok(body));
    }
    let h = hfraction_of_quadratic(&model, max_steps.unwrap_or_else(|| default_max_steps(n)))?.found()?;
    let body = match f {
        Format::Json => pretty(&json!({ "n": n, "ell": ell, "hfraction": json::hfraction(&h) })),
        Format::Text => format!("n = {n}, ell = {ell}\n{}", render_fraction(&h)),
        Format::Csv => return Err(no_csv("hfrac")),
    };
    Ok(Output::ok(body))
}

fn hankel_csv(n: usize, ell: usize, values: &[BigInt], source: &str) -> String {
    let mut out = csv_row(&["n", "ell", "j", "delta", "source"].map(String::from));
    for (j, v) in values.iter().enumerate() {
        out += &csv_row(&[n.to_string(), ell.to_string(), j.to_string(), v.to_string(), source.to_string()]);
    }
    out
}

fn join(values: &[BigInt]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn render_checks(checks: &[CheckResult]) -> String {
    checks.iter().map(|c| format!("{c}\n")).collect()
}

fn status(checks: &[CheckResult]) -> i32 {
    if checks.iter().all(|c| c.pass) {
        exit::OK
    } else {
        exit::CHECK_FAILED
    }
}

pub fn cmd_hankel(n: usize, ell: usize, horizon: Option<usize>, source: Option<HankelSource>, f: Format) -> Result<Output> {
    need_n(n)?;
    let horizon = horizon.unwrap_or(4 * n * (n + 1));
    let source = source.unwrap_or(if ell <= n + 1 { HankelSource::Both } else { HankelSource::BruteForce });
    let r = hankel_sequence(n, ell, horizon, source)?;
    let body = match f {
        Format::Json => pretty(&json::hankel_report(&r)),
        Format::Csv => hankel_csv(n, ell, &r.values, source.as_str()),
        Format::Text => format!(
            "n = {n}, ell = {ell}, horizon = {horizon}, source = {source}\n{}\n{}",
            join(&r.values),
            render_checks(&r.checks)
        ),
    };
    Ok(Output { body, code: status(&r.checks) })
}

pub fn cmd_verify(suite: Suite, range: NRange, source: HankelSource, f: Format) -> Result<Output> {
    let ns = range.values();
    let checks = run_suite(suite, &ns, source)?;
    let body = match f {
        Format::Json => pretty(&json::verify_report(suite.name(), &ns, &checks)),
        Format::Csv => {
            let mut out = csv_row(&["name", "pass", "j", "expected", "got"].map(String::from));
            for c in &checks {
                let (j, e, g) = c
                    .counterexample
                    .as_ref()
                    .map_or((String::new(), String::new(), String::new()), |x| (x.j.to_string(), x.expected.clone(), x.got.clone()));
                out += &csv_row(&[c.name.clone(), c.pass.to_string(), j, e, g]);
            }
            out
        }
        Format::Text => {
            let failed = checks.iter().filter(|c| !c.pass).count();
            format!(
                "{}suite {suite}, n = {}..{}: {} checks, {failed} failed\n",
                render_checks(&checks),
                range.start,
                range.end,
                checks.len()
            )
        }
    };
    Ok(Output { body, code: status(&checks) })
}

pub fn cmd_modp(n: usize, ell: usize, p: u64, max_steps: Option<usize>, f: Format) -> Result<Output> {
    need_n(n)?;
    let r = modp_analysis(n, ell, p, max_steps.unwrap_or_else(|| default_max_steps(n)))?;
    let code = match &r.outcome {
        ModpOutcome::Cycle { consistency, .. } if !consistency.pass => exit::CHECK_FAILED,
        _ => exit::OK,
    };
    let body = match f {
        Format::Json => pretty(&json::modp_report(&r)),
        Format::Csv => return Err(no_csv("modp")),
        Format::Text => {
            let head = format!("n = {n}, ell = {ell}, p = {p}\n");
            match &r.outcome {
                ModpOutcome::Cycle { hfraction_preperiod, hfraction_period, hankel_preperiod, hankel_period, consistency, .. } => format!(
                    "{head}H-fraction: preperiod {hfraction_preperiod}, period {hfraction_period}\n\
                     Hankel determinants: preperiod {hankel_preperiod}, period {hankel_period}\n{consistency}\n"
                ),
                ModpOutcome::Inconclusive { steps } => {
                    format!("{head}inconclusive: no repeated model within {steps} steps\n")
                }
                ModpOutcome::VanishingSeries => format!("{head}the shifted series vanishes mod {p}\n"),
            }
        }
    };
    Ok(Output { body, code })
}

pub fn cmd_scan(n: usize, ell: Option<usize>, horizon: Option<usize>, f: Format) -> Result<Output> {
    need_n(n)?;
    let ell = ell.unwrap_or(n + 2);
    let r = conjecture_scan(n, ell, horizon.unwrap_or(4 * n * (n + 1)))?;
    let body = match f {
        Format::Json => pretty(&json::conjecture_report(&r)),
        Format::Csv => hankel_csv(n, ell, &r.values, "brute_force"),
        Format::Text => {
            let verdict = match r.periodicity_verdict {
                PeriodicityVerdict::Holds => "holds".to_string(),
                PeriodicityVerdict::Fails { j } => format!("fails at j = {j}"),
                PeriodicityVerdict::WindowTooShort => "window too short".to_string(),
            };
            let bound = match (r.conjectured_bound, r.within_bound) {
                (Some(b), Some(ok)) => format!("within [-{b}, {b}]: {ok}\n"),
                _ => String::new(),
            };
            format!(
                "[{}] n = {n}, ell = {ell}, horizon = {}\nmin {}, max {}, max |value| {}\n(anti)periodicity: {verdict}\n{bound}",
                r.label, r.horizon, r.value_min, r.value_max, r.max_abs
            )
        }
    };
    Ok(Output::ok(body))
}

/// Parses `args` (program name first), runs the command and writes the
/// result. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::USAGE } else { exit::OK };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &out.body),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(out.body.as_bytes())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return exit::CHECK_FAILED;
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}
