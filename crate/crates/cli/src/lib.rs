//! Command-line front end for `hdx-core`.
//!
//! Every analysis command writes one JSON report to standard output:
//! the command line with all resolved flags, SHA-256 digests of the input
//! files, a result payload and a status. `walk` writes CSV and `gen` writes
//! a complex document instead. Diagnostics go to standard error.
//!
//! Exit codes: 0 pass (or not-applicable without `--strict`), 1 audit
//! failure, 2 usage or input error, 3 capacity exceeded.

mod args;
mod audit;
mod commands;
mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;
pub use report::{CliError, Status};

use args::Command;
use report::{Invocation, Output};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// Environment variable capping the worker thread count (0 = automatic).
pub const THREADS_VAR: &str = "HDX_THREADS";

/// Runs the command line `argv` (including the program name) against the
/// process's standard streams and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`], writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render().ansi());
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    let threads = match thread_count() {
        Ok(t) => t,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let invocation = Invocation::new(&argv);
    let execute = || dispatch(&cli, &invocation);
    let result = match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(execute),
            Err(e) => Err(CliError::Usage(format!(
                "cannot start {n} worker threads: {e}"
            ))),
        },
        None => execute(),
    };
    finish(result, &cli, &invocation, out, err)
}

fn thread_count() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(0) => Ok(None),
            Ok(n) => Ok(Some(n)),
            Err(_) => Err(format!("{THREADS_VAR}={v:?} is not a thread count")),
        },
    }
}

fn dispatch(cli: &Cli, inv: &Invocation) -> Result<Output, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen(c) => commands::gen(c),
        Command::Validate(a) => commands::validate(inv, g, a),
        Command::Spectrum(a) => commands::spectrum(inv, g, a),
        Command::Cheeger(a) => commands::cheeger(inv, g, a),
        Command::Cocycles(a) => commands::cocycles(inv, g, a),
        Command::Certify(a) => commands::certify(inv, g, a),
        Command::Audit(a) => audit::audit(inv, g, a),
        Command::Walk(a) => commands::walk(inv, g, a),
        Command::VerifyTheorem(a) => commands::verify_theorem(inv, g, a),
    }
}

fn finish(
    result: Result<Output, CliError>,
    cli: &Cli,
    inv: &Invocation,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match result {
        Ok(output) => {
            let status = output.status();
            if let Err(e) = out.write_all(output.render().as_bytes()) {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            match status {
                Status::Pass => EXIT_OK,
                Status::NotApplicable if cli.global.strict => EXIT_FAIL,
                Status::NotApplicable => EXIT_OK,
                Status::Fail => EXIT_FAIL,
                Status::Error => EXIT_USAGE,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if !matches!(cli.command, Command::Gen(_) | Command::Walk(_)) {
                let _ = out.write_all(inv.error_report(&e).as_bytes());
            }
            e.exit_code()
        }
    }
}
