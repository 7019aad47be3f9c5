//! Library side of the `polydaehee` binary, so commands can be driven
//! from tests without spawning a process.
//!
//! Exit codes: 0 success, 1 a check failed (or an I/O problem), 2 usage
//! error such as an unknown family, an invalid parameter or a missing
//! assignment.

pub mod args;
pub mod render;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use polydaehee_core::identities::{run_suite, Grid, SuiteOptions, Theorem};
use polydaehee_core::{
    family_build, family_catalog, Engine, Error, FamilySpec, IdentityReport, Params, Rational, Symbol, SymbolNames,
};
use thiserror::Error;

use args::{Assignments, Cli, Command, EvalArgs, FamilyArgs, ReportFormat, TableArgs, VerifyArgs, MAX_ORDER};

pub use render::parse_table_json;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::UnknownFamily(_)
                | Error::InvalidParameter(_)
                | Error::MissingAssignment(_)
                | Error::IndexOutOfRange { .. }
                | Error::Parse(_)
                | Error::DivisionByZero => 2,
                _ => 1,
            },
            CliError::Io(_) => 1,
        }
    }
}

/// What a command produced: text for stdout and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Parses `argv` (including the program name) and runs the command.
/// Usage problems come back as text on `stderr` with code 2.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (result, output) = match &cli.command {
        Command::Table(a) => (cmd_table(a), a.output.as_deref()),
        Command::Eval(a) => (cmd_eval(a), a.output.as_deref()),
        Command::Verify(a) => (cmd_verify(a), a.output.as_deref()),
    };
    match result.and_then(|o| emit(o, output, stdout)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(outcome: Outcome, path: Option<&Path>, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match path {
        Some(p) => fs::write(p, &outcome.stdout)?,
        None => stdout.write_all(outcome.stdout.as_bytes())?,
    }
    Ok(outcome.code)
}

fn check_order(order: usize) -> Result<(), CliError> {
    if order > MAX_ORDER {
        return Err(CliError::Usage(format!("order must be at most {MAX_ORDER}")));
    }
    Ok(())
}

fn params(f: &FamilyArgs) -> Params {
    Params {
        k: f.k,
        m: f.m,
        a: f.a,
        b: f.b,
        lambda: f.lambda.clone(),
    }
}

fn assignment(a: &Assignments) -> BTreeMap<Symbol, Rational> {
    [
        (Symbol::Gamma, &a.gamma),
        (Symbol::Eta, &a.eta),
        (Symbol::Omega, &a.omega),
    ]
    .into_iter()
    .filter_map(|(s, v)| v.clone().map(|v| (s, v)))
    .collect()
}

pub fn cmd_table(args: &TableArgs) -> Result<Outcome, CliError> {
    if args.list {
        let mut out = String::new();
        for spec in family_catalog() {
            out.push_str(&format!("{:<40} {}\n", spec.name, spec.description()));
        }
        return Ok(Outcome { stdout: out, code: 0 });
    }
    check_order(args.order)?;
    let spec = FamilySpec::new(&args.family.family, params(&args.family))?;
    let table = family_build(&spec, args.order)?;
    let at = assignment(&args.at);
    let members: Vec<_> = table
        .members
        .iter()
        .map(|p| at.iter().fold(p.clone(), |acc, (s, v)| acc.specialize(*s, v)))
        .collect();
    let names = match &args.names {
        Some(n) if n.len() == 3 => SymbolNames([n[0].clone(), n[1].clone(), n[2].clone()]),
        Some(n) => {
            return Err(CliError::Usage(format!(
                "--names takes 3 comma-separated names, got {}",
                n.len()
            )))
        }
        None => SymbolNames::default(),
    };
    Ok(Outcome {
        stdout: render::table(&table, &members, args.format, &names),
        code: 0,
    })
}

pub fn cmd_eval(args: &EvalArgs) -> Result<Outcome, CliError> {
    check_order(args.n)?;
    let spec = FamilySpec::new(&args.family.family, params(&args.family))?;
    let table = family_build(&spec, args.n)?;
    let value = table.member_eval(args.n, &assignment(&args.at))?;
    Ok(Outcome {
        stdout: format!("{value}\n"),
        code: 0,
    })
}

/// Suite grid after applying the command-line restrictions.
pub fn verify_grid(args: &VerifyArgs) -> Grid {
    let mut grid = Grid::default();
    if !args.k.is_empty() {
        grid.ks = args.k.clone();
    }
    if !args.m.is_empty() {
        grid.ms = args.m.clone();
    }
    if !args.a.is_empty() {
        grid.as_ = args.a.clone();
    }
    if !args.b.is_empty() {
        grid.bs = args.b.clone();
    }
    if !args.lambda.is_empty() {
        grid.lambdas = args.lambda.clone();
    }
    grid
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    check_order(args.order)?;
    let options = match &args.theorem {
        Some(id) => {
            SuiteOptions::only(Theorem::from_id(id).ok_or_else(|| CliError::Usage(format!("unknown theorem {id:?}")))?)
        }
        None => SuiteOptions::default(),
    };
    let grid = verify_grid(args);
    if grid.is_empty() {
        return Err(CliError::Usage("the requested grid is empty".into()));
    }
    for p in grid.points() {
        let params = Params {
            k: p.k,
            m: p.m,
            a: p.a,
            b: 0,
            lambda: p.lambda.clone(),
        };
        FamilySpec::new("gabpdp", params.clone())?;
        if let Some(f) = &args.family {
            FamilySpec::new(f, params)?;
        }
    }
    let reports = with_thread_cap(|| run_suite(&Engine::new(), &grid, args.order, &options))?;
    let all_pass = reports.iter().all(IdentityReport::passed);
    let stdout = match args.format {
        ReportFormat::Text => render::reports_text(&reports),
        ReportFormat::Json => render::reports_json(&reports),
    };
    Ok(Outcome {
        stdout,
        code: if all_pass { 0 } else { 1 },
    })
}

/// Runs `f` on a pool capped by `POLYDAEHEE_THREADS`, if set.
fn with_thread_cap<R: Send>(f: impl FnOnce() -> R + Send) -> Result<R, CliError> {
    let cap =
        match std::env::var("POLYDAEHEE_THREADS") {
            Ok(v) => {
                Some(v.trim().parse::<usize>().ok().filter(|n| *n > 0).ok_or_else(|| {
                    CliError::Usage(format!("POLYDAEHEE_THREADS must be a positive integer, got {v:?}"))
                })?)
            }
            Err(_) => None,
        };
    match cap {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}
