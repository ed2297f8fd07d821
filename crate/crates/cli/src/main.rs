//! `qrec`: command-line access to every stage of the q-recurrence pipeline.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qrec_core::io::json as enc;
use qrec_core::regularize::check_regular;
use qrec_core::solve::{check_solutions, rational_t_solutions_with, SolveOptions};
use qrec_core::{
    degree_bound, denominator_t_bound, head_regularize, lambda_poly, ore_row_rank, parse_poly, parse_system,
    polynomial_solutions, rho_poly, tail_regularize, BoundReport, Error, QRecSystem, RationalFunction,
    RegularizationTrace, SolutionSet,
};

#[derive(Parser, Debug)]
#[command(name = "qrec", version, about = "Rational solutions of linear q-recurrence systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report dimensions, rank, and the regularity of the t-tail and t-head.
    Check(Common),
    /// Make the t-trailing matrix nonsingular.
    TailRegularize(Common),
    /// Make the t-leading matrix nonsingular.
    HeadRegularize(Common),
    /// Bound the power of t in denominators of rational solutions.
    Denbound(Common),
    /// Bound the degree of polynomial solutions.
    Degbound(Common),
    /// All polynomial solutions up to a given degree.
    Polysolve {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N")]
        max_degree: usize,
    },
    /// All rational solutions with denominator t^n d(t).
    Ratsolve {
        #[command(flatten)]
        common: Common,
        /// Extra denominator factor d(t), not divisible by t.
        #[arg(long, value_name = "EXPR")]
        aperiodic_denominator: Option<String>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// System document, or `-` for standard input.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include regularization steps.
    #[arg(long)]
    trace: bool,
    /// Re-verify computed solutions against the input system.
    #[arg(long)]
    verify: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. }
            | Error::Semantic(_)
            | Error::InvalidQ(_)
            | Error::DimensionMismatch { .. }
            | Error::InvalidAperiodicDenominator => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Structured result: JSON value plus its text rendering, and the exit code.
struct Report {
    json: Value,
    text: String,
    code: u8,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, code: 0 }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure { code: 2, message: format!("cannot read {}: {e}", path.display()) })?;
    Ok(text)
}

fn load(common: &Common) -> Result<QRecSystem, Failure> {
    Ok(parse_system(&read_input(&common.file)?)?)
}

fn vector_text(v: &[RationalFunction]) -> String {
    let parts: Vec<String> = v.iter().map(|f| f.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn trace_text(trace: &RegularizationTrace, out: &mut String) {
    if trace.is_empty() {
        out.push_str("trace: no steps\n");
    }
    for (i, step) in trace.steps.iter().enumerate() {
        let _ = writeln!(out, "step {i}: {step}");
    }
}

fn bound_text(name: &str, poly: &str, r: &BoundReport, out: &mut String) {
    let candidates: Vec<String> = r.candidates.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "{poly} = {}", r.det_poly);
    let _ = writeln!(out, "candidates: {{{}}}", candidates.join(", "));
    if let Some(s) = r.structural_bound {
        let _ = writeln!(out, "structural bound: {s}");
    }
    let _ = writeln!(out, "{name}: {}", r.bound);
}

fn solutions_json(set: &SolutionSet) -> Value {
    enc::solution_set(set)
}

fn solutions_text(set: &SolutionSet, out: &mut String) {
    match (&set.particular, set.feasible) {
        (_, false) => out.push_str("particular: none (system is infeasible)\n"),
        (Some(p), true) => {
            let _ = writeln!(out, "particular: {}", vector_text(p));
        }
        (None, true) => out.push_str("particular: 0\n"),
    }
    let _ = writeln!(out, "dimension: {}", set.dimension());
    for (i, v) in set.homogeneous_basis.iter().enumerate() {
        let _ = writeln!(out, "basis {i}: {}", vector_text(v));
    }
}

fn check(common: &Common) -> Result<Report, Failure> {
    let sys = load(common)?;
    let rank = ore_row_rank(sys.matrix());
    let lambda = lambda_poly(&sys);
    let rho = rho_poly(&sys);
    let ell = sys.matrix().t_degree();
    let regular = rank == sys.dimension();
    let json = json!({
        "dimension": sys.dimension(),
        "order": sys.order(),
        "t_degree": ell,
        "nu": sys.nu(),
        "q": enc::rational(sys.q().value()),
        "rank": rank,
        "regular": regular,
        "tail_regular": !lambda.is_zero(),
        "head_regular": !rho.is_zero(),
        "lambda": enc::poly(&lambda),
        "rho": enc::poly(&rho),
    });
    let mut text = String::new();
    let _ = writeln!(text, "q = {}", sys.q());
    let _ = writeln!(text, "dimension m = {}", sys.dimension());
    let _ = writeln!(text, "order s = {}", sys.order());
    let _ = writeln!(text, "t-degree l = {}", ell.map_or("none".to_string(), |l| l.to_string()));
    let _ = writeln!(text, "nu = {}", sys.nu());
    let _ = writeln!(text, "rank = {rank}");
    let _ = writeln!(text, "regular: {regular}");
    let _ = writeln!(text, "t-tail regular: {}", !lambda.is_zero());
    let _ = writeln!(text, "t-head regular: {}", !rho.is_zero());
    let _ = writeln!(text, "lambda = {lambda}");
    let _ = writeln!(text, "rho = {rho}");
    Ok(Report { json, text, code: if regular { 0 } else { 1 } })
}

fn regularize(common: &Common, head: bool) -> Result<Report, Failure> {
    let sys = load(common)?;
    let (out, trace) = if head { head_regularize(&sys)? } else { tail_regularize(&sys)? };
    let (name, poly) = if head { ("rho", rho_poly(&out)) } else { ("lambda", lambda_poly(&out)) };
    let mut json = json!({ "system": enc::system(&out), name: enc::poly(&poly), "steps": trace.steps.len() });
    let mut text = format!("{out}{name} = {poly}\nsteps: {}\n", trace.steps.len());
    if common.trace {
        json["trace"] = enc::trace(&trace);
        trace_text(&trace, &mut text);
    }
    Ok(Report::ok(json, text))
}

fn bound(common: &Common, degree: bool) -> Result<Report, Failure> {
    let sys = load(common)?;
    check_regular(&sys)?;
    let (reg, trace) = if degree { head_regularize(&sys)? } else { tail_regularize(&sys)? };
    let report = if degree { degree_bound(&reg)? } else { denominator_t_bound(&reg)? };
    let mut json = enc::bound_report(&report);
    let mut text = String::new();
    if degree {
        bound_text("degree bound", "rho", &report, &mut text);
    } else {
        bound_text("denominator bound", "lambda", &report, &mut text);
    }
    if common.trace {
        json["trace"] = enc::trace(&trace);
        trace_text(&trace, &mut text);
    }
    Ok(Report::ok(json, text))
}

fn polysolve(common: &Common, max_degree: usize) -> Result<Report, Failure> {
    let sys = load(common)?;
    let set = polynomial_solutions(&sys, max_degree);
    if common.verify {
        check_solutions(&sys, &set)?;
    }
    let mut text = String::new();
    solutions_text(&set, &mut text);
    let code = if set.feasible { 0 } else { 1 };
    Ok(Report { json: solutions_json(&set), text, code })
}

fn ratsolve(common: &Common, aperiodic: Option<&str>) -> Result<Report, Failure> {
    let sys = load(common)?;
    let aperiodic_denominator = aperiodic.map(parse_poly).transpose()?;
    let options = SolveOptions { aperiodic_denominator, ..Default::default() };
    // the library verifies every returned vector, so --verify is always on here
    let report = rational_t_solutions_with(&sys, &options)?;
    let set = &report.solutions;
    let mut json = json!({
        "denominator_bound": enc::bound(report.denominator.bound),
        "degree_bound": enc::bound(report.degree.bound),
        "solutions": solutions_json(set),
    });
    let mut text = String::new();
    let _ = writeln!(text, "denominator bound n* = {}", report.denominator.bound);
    let _ = writeln!(text, "degree bound N* = {}", report.degree.bound);
    solutions_text(set, &mut text);
    if common.trace {
        json["tail_trace"] = enc::trace(&report.tail_trace);
        json["head_trace"] = enc::trace(&report.head_trace);
        text.push_str("tail regularization\n");
        trace_text(&report.tail_trace, &mut text);
        text.push_str("head regularization\n");
        trace_text(&report.head_trace, &mut text);
    }
    let code = if set.feasible { 0 } else { 1 };
    Ok(Report { json, text, code })
}

/// Runs the command line `args` (program name first) and returns the exit code.
fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let (common, result) = match &cli.command {
        Command::Check(c) => (c, check(c)),
        Command::TailRegularize(c) => (c, regularize(c, false)),
        Command::HeadRegularize(c) => (c, regularize(c, true)),
        Command::Denbound(c) => (c, bound(c, false)),
        Command::Degbound(c) => (c, bound(c, true)),
        Command::Polysolve { common, max_degree } => (common, polysolve(common, *max_degree)),
        Command::Ratsolve { common, aperiodic_denominator } => {
            (common, ratsolve(common, aperiodic_denominator.as_deref()))
        }
    };
    match result {
        Ok(report) => {
            let written = match common.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("values serialize")),
                Format::Text => write!(out, "{}", report.text),
            };
            if written.is_err() {
                return 1;
            }
            report.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let code = run(&args, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}
