use std::fmt;

use crate::syntax::SyntaxError;

/// Anything that makes an invocation fail with exit code 2.
#[derive(Debug)]
pub enum CliError {
    /// Unknown command or flag, missing value; carries clap's rendered text.
    Usage(String),
    Syntax {
        flag: String,
        source: String,
        error: SyntaxError,
    },
    Input(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Syntax { .. } => "syntax",
            CliError::Input(_) => "input",
        }
    }

    /// Human-oriented text for standard error.
    pub fn diagnostic(&self) -> String {
        match self {
            CliError::Usage(text) => text.trim_end().to_string(),
            CliError::Syntax {
                flag,
                source,
                error,
            } => {
                format!("error: in --{flag}: {}", error.render(source))
            }
            CliError::Input(msg) => format!("error: {msg}"),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(text) => {
                let first = text.lines().next().unwrap_or("usage error");
                f.write_str(first.trim_start_matches("error: "))
            }
            CliError::Syntax { flag, error, .. } => write!(f, "--{flag}: {error}"),
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<pfaff_core::Error> for CliError {
    fn from(e: pfaff_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
