use serde::Serialize;
use serde_json::{Map, Value};

use tangent_core::Error;

/// The single JSON object every command prints under `--json`.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub status: Status,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// Successful command output: canonical inputs, JSON result, human text.
#[derive(Debug)]
pub struct Report {
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub text: String,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad user input: exit code 2.
    Input(String),
    /// A certificate failed re-verification: exit code 3.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Internal(m) => m,
        }
    }

    /// Wraps a core error, naming the argument it came from.
    pub fn from_core(arg: &str, err: Error) -> Self {
        match err {
            Error::Invariant(m) => CliError::Internal(m),
            Error::Parse(p) => CliError::Input(format!(
                "{arg}: {} (at byte {})",
                p.message, p.position
            )),
            other => CliError::Input(format!("{arg}: {other}")),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Input(format!("I/O error: {err}"))
    }
}

/// Ordered key/value map for `inputs`.
pub fn fields<I, K>(pairs: I) -> Map<String, Value>
where
    I: IntoIterator<Item = (K, Value)>,
    K: Into<String>,
{
    pairs.into_iter().map(|(k, v)| (k.into(), v)).collect()
}
