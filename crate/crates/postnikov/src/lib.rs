//! Command-line front end for `postnikov-core`: object ingestion, certifiers and
//! evaluators as subcommands, JSON reports, and the named acceptance suites.

mod args;
mod commands;
pub mod json;
pub mod objects;
pub mod oracle;
pub mod random;
pub mod report;
pub mod suites;

pub use args::DEFAULT_SEED;
pub use report::{Report, Status};

use clap::Parser;
use std::time::Instant;

/// Why a command could not produce a result.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    /// Malformed or inconsistent input, including violated preconditions.
    #[error("{0}")]
    Input(String),
    /// A self-check inside the library failed.
    #[error("{0}")]
    Internal(String),
}

impl From<postnikov_core::Error> for Failure {
    fn from(e: postnikov_core::Error) -> Self {
        match e {
            postnikov_core::Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

pub enum Outcome {
    Report(Box<Report>, i32),
    /// Help or version text requested on the command line.
    Text(String),
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let start = Instant::now();
    let cli = match args::Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return Outcome::Text(e.to_string()),
        Err(e) => {
            let ctx = report::Context::new(&argv, args::Globals::default());
            let r = ctx.finish(Err(Failure::Input(e.to_string())), start);
            return Outcome::Report(Box::new(r), 2);
        }
    };
    let ctx = report::Context::new(&argv, cli.globals);
    let result = commands::execute(&cli.command, &ctx);
    let r = ctx.finish(result, start);
    let code = r.status.exit_code();
    Outcome::Report(Box::new(r), code)
}
