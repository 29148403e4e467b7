//! Error classes mapped onto distinct process exit codes.

use std::fmt;

/// Exit code for file and structure problems (missing file, malformed TOML,
/// unknown keys, wrong types).
pub const EXIT_PARSE: i32 = 2;
/// Exit code for domain problems (invalid values, unit mismatches).
pub const EXIT_VALIDATION: i32 = 3;
/// Exit code for expected-value check failures.
pub const EXIT_CHECK: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Validation(String),
    CheckFailure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::CheckFailure(_) => EXIT_CHECK,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Validation(msg) => write!(f, "validation error: {msg}"),
            CliError::CheckFailure(msg) => write!(f, "check failure: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}
