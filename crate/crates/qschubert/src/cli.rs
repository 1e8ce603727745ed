//! The `qschubert` command line.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qschubert_core::{
    extremal_data, lr_coefficient, quantum_product, quantum_slide, schubert_product, slide, BoundedPartition, Error,
    Partition, RectContext,
};

use crate::harness::{self, CheckKind, FailureKind, Options, VerificationReport};
use crate::record::{self, OutputRecord, Payload};
use crate::render::{self, DiagramKind, Style};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qschubert", version, about = "Classical and quantum Schubert calculus on Grassmannians")]
struct Cli {
    /// Dimension of the subspaces (rows of the rectangle).
    #[arg(short = 'k', global = true)]
    k: Option<usize>,
    /// Dimension of the ambient space.
    #[arg(short = 'n', global = true)]
    n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for `verify`.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StyleArg {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Loops,
    Toric,
    Slide,
    Frames,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Comma-separated parts; the empty string is the empty partition.
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    lambda: Parts,
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    mu: Parts,
}

/// A parsed partition argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parts(pub Vec<usize>);

#[derive(Debug, Clone)]
struct Checks(Vec<CheckKind>);

#[derive(Debug, Clone)]
struct Shifts(Vec<i64>);

#[derive(Debug, Subcommand)]
enum Command {
    /// Classical product sigma_lambda * sigma_mu.
    Product(PairArgs),
    /// Quantum product, by rim-hook reduction.
    Qproduct(PairArgs),
    /// Least and greatest powers of q, with the rotated partitions.
    Bounds(PairArgs),
    /// The class with coefficient one built by sliding.
    Nu {
        #[command(flatten)]
        pair: PairArgs,
        /// Power of q; omit for the classical construction.
        #[arg(short = 'd', allow_hyphen_values = true)]
        d: Option<i64>,
        /// Also print the stages of the slide.
        #[arg(long)]
        trace: bool,
    },
    /// A single Littlewood-Richardson coefficient; partitions need not fit a rectangle.
    Lrcoef {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Parts,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Parts,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        nu: Parts,
    },
    /// Exhaustive checks over all pairs of the Grassmannian.
    Verify {
        /// `all` or a comma-separated subset of classical, extremal, support, chain, conjecture.
        #[arg(long, default_value = "all", value_parser = parse_checks)]
        checks: Checks,
        /// Visit each unordered pair once.
        #[arg(long)]
        unordered: bool,
        /// Include elapsed time in the output.
        #[arg(long)]
        timings: bool,
    },
    /// Draw loops, frames, a toric shape or the slide.
    Render {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = StyleArg::Ascii)]
        style: StyleArg,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Parts,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Option<Parts>,
        #[arg(short = 'd', allow_hyphen_values = true)]
        d: Option<i64>,
        /// Shifts drawn by `--kind loops`.
        #[arg(long, default_value = "0,1,2", value_parser = parse_shifts, allow_hyphen_values = true)]
        shifts: Shifts,
        /// Steps the frame moves along the loop for `--kind frames`.
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        steps: i64,
    },
}

/// Comma-separated weakly decreasing nonnegative integers; empty means the
/// empty partition.
pub fn parse_partition(s: &str) -> Result<Parts, String> {
    split_partition(s).map(Parts)
}

fn split_partition(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for (i, raw) in s.split(',').enumerate() {
        let raw = raw.trim();
        let v: usize = raw.parse().map_err(|_| format!("part {} (`{raw}`) is not a nonnegative integer", i + 1))?;
        if let Some(&prev) = parts.last() {
            if v > prev {
                return Err(format!("part {} ({v}) exceeds part {} ({prev}): parts must weakly decrease", i + 1, i));
            }
        }
        parts.push(v);
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Ok(parts)
}

fn parse_shifts(s: &str) -> Result<Shifts, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("`{x}` is not an integer")))
        .collect::<Result<_, _>>()
        .map(Shifts)
}

fn parse_checks(s: &str) -> Result<Checks, String> {
    harness::parse_checks(s).map(Checks)
}

/// A failure carrying its exit code.
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn usage(message: impl Into<String>) -> Self {
        Exit { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OracleDisagreement(_)
            | Error::NegativeCoefficient { .. }
            | Error::Overflow
            | Error::GeometricAnomaly(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Exit { code, message: e.to_string() }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one invocation, writing the result to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{shown}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{shown}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn context(cli: &Cli) -> Result<RectContext, Exit> {
    match (cli.k, cli.n) {
        (Some(k), Some(n)) => RectContext::new(k, n).map_err(Exit::from),
        _ => Err(Exit::usage("this command needs both -k and -n")),
    }
}

fn bounded(parts: &[usize], ctx: RectContext, name: &str) -> Result<BoundedPartition, Exit> {
    BoundedPartition::new(parts.to_vec(), ctx).map_err(|e| Exit::usage(format!("--{name}: {e}")))
}

fn pair(args: &PairArgs, ctx: RectContext) -> Result<(BoundedPartition, BoundedPartition), Exit> {
    Ok((bounded(&args.lambda.0, ctx, "lambda")?, bounded(&args.mu.0, ctx, "mu")?))
}

fn sigma(p: &[usize]) -> String {
    if p.is_empty() {
        "σ∅".to_string()
    } else {
        let inner: Vec<String> = p.iter().map(usize::to_string).collect();
        format!("σ({})", inner.join(","))
    }
}

fn paren(p: &[usize]) -> String {
    let inner: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("({})", inner.join(","))
}

fn term_text(coefficient: u64, d: usize, partition: &[usize]) -> String {
    let c = if coefficient == 1 { String::new() } else { coefficient.to_string() };
    let q = match d {
        0 => String::new(),
        1 => "q".to_string(),
        d => format!("q^{d}"),
    };
    let sep = if c.is_empty() && q.is_empty() { "" } else { "·" };
    format!("{c}{q}{sep}{}", sigma(partition))
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn emit(cli: &Cli, ctx: Option<RectContext>, payload: Payload, text: String) -> String {
    match cli.format {
        Format::Text => text,
        Format::Structured => {
            let mut s = OutputRecord::new(ctx, payload).to_json();
            s.push('\n');
            s
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), Exit> {
    match &cli.command {
        Command::Product(args) => {
            let ctx = context(cli)?;
            let (l, m) = pair(args, ctx)?;
            let terms = record::product_terms(&schubert_product(&l, &m)?);
            let text = join_terms(terms.iter().map(|t| term_text(t.coefficient, 0, &t.partition)).collect());
            let payload = Payload::Product { lambda: l.parts().to_vec(), mu: m.parts().to_vec(), terms };
            Ok((emit(cli, Some(ctx), payload, text + "\n"), EXIT_OK))
        }
        Command::Qproduct(args) => {
            let ctx = context(cli)?;
            let (l, m) = pair(args, ctx)?;
            let terms = record::quantum_terms(&quantum_product(&l, &m)?);
            let text = join_terms(terms.iter().map(|t| term_text(t.coefficient, t.d, &t.partition)).collect());
            let payload = Payload::QuantumProduct { lambda: l.parts().to_vec(), mu: m.parts().to_vec(), terms };
            Ok((emit(cli, Some(ctx), payload, text + "\n"), EXIT_OK))
        }
        Command::Bounds(args) => {
            let ctx = context(cli)?;
            let (l, m) = pair(args, ctx)?;
            let b = record::bounds(&l, &m, &extremal_data(&l, &m)?);
            let text = format!(
                "d_min = {} (a = {})\nd_max = {} (b = {})\nlambda_min = {}\nmu_min = {}\nlambda_max = {}\nmu_max = {}\n",
                b.d_min,
                b.a,
                b.d_max,
                b.b,
                paren(&b.lambda_min),
                paren(&b.mu_min),
                paren(&b.lambda_max),
                paren(&b.mu_max)
            );
            Ok((emit(cli, Some(ctx), Payload::Bounds(b), text), EXIT_OK))
        }
        Command::Nu { pair: args, d, trace } => {
            let ctx = context(cli)?;
            let (l, m) = pair(args, ctx)?;
            nu_command(cli, ctx, &l, &m, *d, *trace)
        }
        Command::Lrcoef { lambda, mu, nu } => {
            let p = |v: &Parts| Partition::new(v.0.clone()).map_err(Exit::from);
            let value = lr_coefficient(&p(lambda)?, &p(mu)?, &p(nu)?);
            let ctx = context(cli).ok();
            let payload =
                Payload::LrCoefficient { lambda: lambda.0.clone(), mu: mu.0.clone(), nu: nu.0.clone(), value };
            Ok((emit(cli, ctx, payload, format!("{value}\n")), EXIT_OK))
        }
        Command::Verify { checks, unordered, timings } => {
            let ctx = context(cli)?;
            let options = Options { jobs: cli.jobs, unordered: *unordered };
            let reports: Vec<VerificationReport> =
                checks.0.iter().map(|&c| harness::run_check(ctx, c, &options)).collect();
            let code = if reports.iter().any(VerificationReport::has_internal_failure) {
                EXIT_INTERNAL
            } else if reports.iter().any(VerificationReport::refutes_theorem) {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            };
            let text: String = reports.iter().map(|r| report_text(r, *timings)).collect();
            let payload = Payload::Verify { reports: reports.iter().map(|r| record::report(r, *timings)).collect() };
            Ok((emit(cli, Some(ctx), payload, text), code))
        }
        Command::Render { kind, style, lambda, mu, d, shifts, steps } => {
            let ctx = context(cli)?;
            let l = bounded(&lambda.0, ctx, "lambda")?;
            let need_mu = || -> Result<BoundedPartition, Exit> {
                let m = mu.as_ref().ok_or_else(|| Exit::usage("this diagram needs --mu"))?;
                bounded(&m.0, ctx, "mu")
            };
            let (kind, diagram) = match kind {
                KindArg::Loops => (DiagramKind::Loops, render::loops(&l, &shifts.0)),
                KindArg::Frames => (DiagramKind::Frames, render::frames(&l, *steps)),
                KindArg::Toric => {
                    let d = d.ok_or_else(|| Exit::usage("--kind toric needs -d"))?;
                    (DiagramKind::Toric, render::toric(&need_mu()?, d, &l))
                }
                KindArg::Slide => (DiagramKind::Slide, render::slide_panels(&l, &need_mu()?, *d)?),
            };
            let style = match style {
                StyleArg::Ascii => Style::Ascii,
                StyleArg::Svg => Style::Svg,
            };
            let document = diagram.write(style);
            let payload = Payload::Render {
                diagram: kind.name().to_string(),
                style: style.name().to_string(),
                document: document.clone(),
            };
            Ok((emit(cli, Some(ctx), payload, document), EXIT_OK))
        }
    }
}

fn nu_command(
    cli: &Cli,
    ctx: RectContext,
    l: &BoundedPartition,
    m: &BoundedPartition,
    d: Option<i64>,
    trace: bool,
) -> Result<(String, i32), Exit> {
    let mut text = String::new();
    let payload = match d {
        None => {
            let s = slide(l, m)?;
            let coefficient = lr_coefficient(l.partition(), m.partition(), s.nu.partition());
            text.push_str(&format!("nu = {}\ncoefficient = {coefficient}\nwitness:\n", paren(s.nu.parts())));
            for (r, row) in s.witness.rows().iter().enumerate() {
                let mut line: Vec<String> = vec!["#".to_string(); l.partition().part(r)];
                line.extend(row.iter().map(u32::to_string));
                text.push_str(&format!("  {}\n", line.join(" ")));
            }
            record::NuResult {
                lambda: l.parts().to_vec(),
                mu: m.parts().to_vec(),
                d: None,
                nu: s.nu.parts().to_vec(),
                coefficient,
                witness: Some(record::witness_rows(&s.witness)),
                nu_tilde: None,
            }
        }
        Some(d) => {
            let qs = quantum_slide(l, m, d)?;
            let coefficient = qschubert_core::gw_invariant(l, m, &qs.nu, d)?;
            text.push_str(&format!(
                "nu = {}\nd = {d}\ncoefficient = {coefficient}\nnu_tilde = {}\n",
                paren(qs.nu.parts()),
                paren(&qs.nu_tilde)
            ));
            record::NuResult {
                lambda: l.parts().to_vec(),
                mu: m.parts().to_vec(),
                d: Some(d),
                nu: qs.nu.parts().to_vec(),
                coefficient,
                witness: None,
                nu_tilde: Some(qs.nu_tilde.clone()),
            }
        }
    };
    if trace {
        text.push('\n');
        text.push_str(&render::slide_panels(l, m, d)?.to_ascii());
    }
    Ok((emit(cli, Some(ctx), Payload::Nu(payload), text), EXIT_OK))
}

fn report_text(r: &VerificationReport, timings: bool) -> String {
    let mut s = format!(
        "{} Gr({},{}): {}  pairs={} skipped={} subcases={} failures={}",
        r.check,
        r.ctx.k(),
        r.ctx.n(),
        r.status.name(),
        r.cases_run,
        r.skipped,
        r.subcases,
        r.failures.len()
    );
    if r.check == CheckKind::Conjecture {
        s.push_str(&format!(
            " counterexamples={} anomalies={}",
            r.count(FailureKind::Counterexample),
            r.count(FailureKind::Anomaly)
        ));
    }
    if timings {
        s.push_str(&format!(" elapsed={}ms", r.elapsed.as_millis()));
    }
    s.push('\n');
    for (key, value) in &r.observations {
        s.push_str(&format!("  observed: {key}: {value}\n"));
    }
    for f in &r.failures {
        s.push_str(&format!("  {}: lambda={} mu={}", f.kind.name(), f.lambda, f.mu));
        if let Some(d) = f.d {
            s.push_str(&format!(" d={d}"));
        }
        if let Some(nu) = &f.nu {
            s.push_str(&format!(" nu={nu}"));
        }
        s.push_str(&format!(" expected {} got {}\n", f.expected, f.actual));
    }
    s
}
