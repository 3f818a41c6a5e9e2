use std::path::PathBuf;
use std::process::ExitCode;

use fibrous_core::{EvalError, OracleError, ParseError, ParseErrorKind};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PARSE: u8 = 3;
pub const EXIT_EVAL: u8 = 4;
pub const EXIT_VERIFY: u8 = 5;
pub const EXIT_IO: u8 = 6;
pub const EXIT_SCHEMA: u8 = 7;
pub const EXIT_COMPLEX: u8 = 8;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("error: {message}")]
    Usage { message: String },
    #[error("{}", .error.diagnostic(.text))]
    Parse { text: String, error: ParseError },
    #[error("error: {0}")]
    Eval(#[from] EvalError),
    #[error("error: verification failed: {0}")]
    Verify(String),
    #[error("error: cannot read {}: {error}", .path.display())]
    Io {
        path: PathBuf,
        error: std::io::Error,
    },
    #[error("error: invalid input in {}: {message}", .path.display())]
    Schema { path: PathBuf, message: String },
    #[error("error: invalid complex: {0}")]
    Complex(#[from] OracleError),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage { .. } => EXIT_USAGE,
            CliError::Parse { error, .. } => match error.kind {
                ParseErrorKind::UnknownName | ParseErrorKind::Parameter => EXIT_EVAL,
                _ => EXIT_PARSE,
            },
            CliError::Eval(_) => EXIT_EVAL,
            CliError::Verify(_) => EXIT_VERIFY,
            CliError::Io { .. } => EXIT_IO,
            CliError::Schema { .. } => EXIT_SCHEMA,
            CliError::Complex(OracleError::Overflow) => EXIT_EVAL,
            CliError::Complex(_) => EXIT_COMPLEX,
        })
    }
}
