use std::fmt;
use std::io;
use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug)]
pub enum Error {
    /// A scenario, configuration, or physical-constant invariant was violated.
    InvalidInput(String),
    /// An operation required a feasible placement and received one that is not.
    InfeasiblePlacement(String),
    /// Config file could not be parsed.
    Config {
        path: PathBuf,
        line: usize,
        msg: String,
    },
    /// I/O failure, with the path that caused it.
    Io { path: PathBuf, source: io::Error },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::InfeasiblePlacement(msg) => write!(f, "infeasible placement: {msg}"),
            Error::Config { path, line, msg } => {
                write!(f, "{}:{line}: {msg}", path.display())
            }
            Error::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
