//! CLI error classes and their exit-code contract.

use serde::Serialize;

/// Exit code 1: malformed input (JSON, literals, descriptors, parameters).
/// Exit code 2: a check was invoked with its hypothesis unmet.
/// Exit code 3: a computation hit the configured resource ceiling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Hypothesis(String),
    Resource(String),
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input(message.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Hypothesis(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Hypothesis(_) => "hypothesis-unmet",
            CliError::Resource(_) => "resource-ceiling",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Hypothesis(m) | CliError::Resource(m) => m,
        }
    }

    /// The machine-readable error object printed to stdout.
    pub fn to_report(&self) -> ErrorReport {
        ErrorReport {
            error: ErrorBody {
                code: self.code(),
                message: self.message().to_string(),
            },
        }
    }
}

impl From<orebit_core::Error> for CliError {
    fn from(e: orebit_core::Error) -> Self {
        match e {
            orebit_core::Error::HypothesisUnmet(_) => CliError::Hypothesis(e.to_string()),
            orebit_core::Error::ResourceCeiling { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.code(), self.message())
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub code: &'static str,
    pub message: String,
}
