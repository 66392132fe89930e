//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing identity, 2 on
//! usage errors (bad flags, unknown family or check, inapplicable options).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::{parse_rational, Pretty, Rational, Wire};
use crate::degenerate::{LambdaMode, XMode};
use crate::error::{Error, Result};
use crate::triangle::{family_poly, family_value, Family, NumberTriangle};
use crate::verify::{default_lambda_modes, run_checks, CheckId, IdentityCheck, Mutation};

#[derive(Parser, Debug)]
#[command(
    name = "degenfact",
    version,
    about = "Exact degenerate central factorial numbers and identity checks"
)]
pub struct Cli {
    /// Worker threads for table rows and verification checks.
    #[arg(long, global = true, env = "DEGENFACT_JOBS", default_value_t = 1,
          value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a number triangle for 0 <= k <= min(n, k_max), n <= n_max.
    Table(TableArgs),
    /// Print one entry of a family.
    Value(ValueArgs),
    /// Print the polynomial in x attached to a family (S1, t, T2, E).
    Poly(PolyArgs),
    /// Run the identity checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// S1, T, t, S2, T2, t1 or E (long forms T_central, S2_lambda, Euler_r, ... also work).
    #[arg(long, value_parser = parse_family)]
    pub family: Family,

    /// "symbolic" or a rational such as -2/5.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true, value_parser = parse_lambda)]
    pub lambda: LambdaMode,

    /// Euler order r as a rational; only for family E.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
    pub r: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n_max: usize,
    /// Defaults to n_max.
    #[arg(long)]
    pub k_max: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ValueArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
    /// Column index; only T2 uses it.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// "symbolic" or a rational to substitute for x.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true, value_parser = parse_x)]
    pub x: XMode,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    pub n_max: usize,
    #[arg(long, default_value_t = 12)]
    pub k_max: usize,
    /// Repeatable. Defaults to symbolic plus 0, 1, -1, 1/3 and -2/5.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_lambda)]
    pub lambda: Vec<LambdaMode>,
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true, value_parser = parse_x)]
    pub x: XMode,
    /// Repeatable check id such as THM4 or LIMIT_S2. Defaults to all.
    #[arg(long, value_parser = parse_check)]
    pub check: Vec<CheckId>,
    /// Perturb one coefficient in every check with this seed (negative control).
    #[arg(long)]
    pub mutate: Option<u64>,
    /// Include wall-clock times in the report.
    #[arg(long)]
    pub timings: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family> {
    s.parse()
}

fn parse_lambda(s: &str) -> Result<LambdaMode> {
    s.parse()
}

fn parse_x(s: &str) -> Result<XMode> {
    s.parse()
}

fn parse_rat(s: &str) -> Result<Rational> {
    parse_rational(s)
}

fn parse_check(s: &str) -> Result<CheckId> {
    s.parse()
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = stdout.write_all(e.render().to_string().as_bytes());
                return 0;
            }
            let mut rendered = e.render().to_string();
            if !rendered.contains("Usage:") {
                rendered.push_str(&format!("\n{}\n", Cli::command().render_usage()));
            }
            let _ = stderr.write_all(rendered.as_bytes());
            return 2;
        }
    };
    match execute(&cli) {
        Ok((text, output, code)) => match emit(&text, output.as_ref(), stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

pub fn main() -> ExitCode {
    let code = run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code)
}

fn emit(text: &str, output: Option<&PathBuf>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn check_r(family: &FamilyArgs) -> Result<()> {
    if family.r.is_some() && family.family != Family::EulerR {
        return Err(Error::NotApplicable(format!(
            "--r only applies to family E, not {}",
            family.family
        )));
    }
    Ok(())
}

type Outcome = (String, Option<PathBuf>, u8);

fn execute(cli: &Cli) -> Result<Outcome> {
    let jobs = usize::from(cli.jobs);
    match &cli.command {
        Command::Table(a) => {
            check_r(&a.family)?;
            let tri = NumberTriangle::build_with_jobs(
                a.family.family,
                a.n_max,
                a.k_max.unwrap_or(a.n_max),
                &a.family.lambda,
                a.family.r.clone(),
                jobs,
            );
            let text = match a.out.format {
                Format::Csv => tri.to_csv(),
                Format::Json => tri.to_json_string(),
                Format::Text => tri.to_text(),
            };
            Ok((text, a.out.output.clone(), 0))
        }
        Command::Value(a) => {
            check_r(&a.family)?;
            let f = &a.family;
            let v = family_value(f.family, a.n, a.k, &f.lambda, f.r.clone());
            let wire = if v.degree().unwrap_or(0) == 0 {
                v.coeff(0).to_wire()
            } else {
                v.to_wire()
            };
            let text = single(a.n, a.k, f, None, wire, v.pretty(&["λ"]), a.out.format);
            Ok((text, a.out.output.clone(), 0))
        }
        Command::Poly(a) => {
            check_r(&a.family)?;
            let f = &a.family;
            let p = family_poly(f.family, a.n, a.k, &f.lambda, &a.x, f.r.clone())?;
            let text = single(
                a.n,
                a.k,
                f,
                Some(&a.x),
                p.to_wire(),
                p.pretty(&["x", "λ"]),
                a.out.format,
            );
            Ok((text, a.out.output.clone(), 0))
        }
        Command::Verify(a) => verify(a, jobs),
    }
}

fn single(
    n: usize,
    k: usize,
    f: &FamilyArgs,
    x: Option<&XMode>,
    wire: serde_json::Value,
    pretty: String,
    format: Format,
) -> String {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let value = match &wire {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            w.write_record(["n", "k", "value"])
                .expect("in-memory write");
            w.write_record([n.to_string(), k.to_string(), value])
                .expect("in-memory write");
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8")
        }
        Format::Json => {
            let mut doc = json!({
                "family": f.family.as_str(),
                "n": n,
                "k": k,
                "lambda": f.lambda.to_string(),
                "value": wire,
                "pretty": pretty,
            });
            if let Some(x) = x {
                doc["x"] = json!(x.to_string());
            }
            if f.family == Family::EulerR {
                doc["r"] = json!(f
                    .r
                    .clone()
                    .unwrap_or_else(|| Rational::from_integer(1.into()))
                    .to_string());
            }
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("valid JSON")
            )
        }
        Format::Text => format!("{pretty}\n"),
    }
}

fn verify(a: &VerifyArgs, jobs: usize) -> Result<Outcome> {
    if a.format == Format::Csv {
        return Err(Error::NotApplicable("verify writes text or json".into()));
    }
    let modes = if a.lambda.is_empty() {
        default_lambda_modes()
    } else {
        a.lambda.clone()
    };
    let explicit = !a.check.is_empty();
    let ids = if explicit {
        a.check.clone()
    } else {
        CheckId::ALL.to_vec()
    };
    let mut checks = Vec::new();
    for mode in &modes {
        for &id in &ids {
            if !id.applies_to(mode) {
                if explicit {
                    return Err(Error::NotApplicable(format!(
                        "{id} compares against λ = 0 and cannot run with λ = {mode}"
                    )));
                }
                continue;
            }
            let mut c = IdentityCheck::new(id, a.n_max, a.k_max)
                .with_lambda(mode.clone())
                .with_x(a.x.clone());
            if let Some(seed) = a.mutate {
                c = c.with_mutation(Mutation::seeded(seed));
            }
            checks.push(c);
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::NotApplicable(e.to_string()))?;
    let report = pool.install(|| run_checks(checks));
    let text = match a.format {
        Format::Json => report.to_json_string(a.timings),
        _ => report.to_text(a.timings),
    };
    let code = if report.all_passed() { 0 } else { 1 };
    Ok((text, a.output.clone(), code))
}
