//! Command-line front end for `pfaff-core`.
//!
//! Every invocation writes exactly one JSON document to standard output:
//! a report (exit 0 when the verdict holds or is `"ok"`, 1 when it fails)
//! or an error document (exit 2). Diagnostics go to standard error.

pub mod commands;
pub mod error;
pub mod registry;
pub mod report;
pub mod syntax;

use std::ffi::OsString;

use clap::error::ErrorKind;

pub use error::CliError;
pub use registry::{Command, Context, Registry};
pub use report::{Report, Verdict};

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(command: Option<&str>, err: &CliError) -> Self {
        Outcome {
            code: 2,
            stdout: report::render(&report::error_document(command, err)),
            stderr: format!("{}\n", err.diagnostic()),
        }
    }
}

/// Runs the CLI on `args` (including the program name). `seed_var` is the
/// value of `PFAFF_SEED`, if set.
pub fn run<I, T>(args: I, seed_var: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let registry = Registry::standard();
    let matches = match registry.cli().try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                code: 0,
                stdout: e.to_string(),
                stderr: String::new(),
            };
        }
        Err(e) => return Outcome::failure(None, &CliError::Usage(e.render().to_string())),
    };
    let Some((cmd, sub)) = registry.resolve(&matches) else {
        return Outcome::failure(None, &CliError::Usage("error: no command given".into()));
    };
    let ctx = match seed_var {
        None => Context::default(),
        Some(s) => match s.trim().parse() {
            Ok(seed) => Context { default_seed: seed },
            Err(_) => {
                let err =
                    CliError::input(format!("PFAFF_SEED must be an unsigned integer, got `{s}`"));
                return Outcome::failure(Some(cmd.name()), &err);
            }
        },
    };
    match cmd.run(sub, &ctx) {
        Ok(rep) => Outcome {
            code: rep.exit_code(),
            stdout: report::render(&rep.to_json()),
            stderr: String::new(),
        },
        Err(err) => Outcome::failure(Some(cmd.name()), &err),
    }
}
