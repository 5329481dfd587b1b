use std::fmt;
use std::path::PathBuf;

use num_bigint::BigUint;
use serde_json::Value;

/// What a subcommand produced: a table for people, a JSON value for
/// machines, and whether every check it ran passed.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    pub fn new(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }

    pub fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(gorbetti_core::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io(..) => "E_IO",
            CliError::Usage(_) => "E_USAGE",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<gorbetti_core::Error> for CliError {
    fn from(e: gorbetti_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Exact JSON number for an arbitrary-size integer.
pub fn num(n: &BigUint) -> Value {
    serde_json::from_str(&n.to_string()).expect("decimal digits are valid JSON")
}

pub fn nums<'a>(ns: impl IntoIterator<Item = &'a BigUint>) -> Value {
    Value::Array(ns.into_iter().map(num).collect())
}

pub fn parse_big(s: &str, what: &str) -> CliResult<BigUint> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{what} must be a nonnegative integer, got '{s}'")))
}

pub fn join<T: fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
