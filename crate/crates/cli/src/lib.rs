//! File formats, reports and parallel drivers behind the `qclcd` binary.
//!
//! Exit codes: 0 success, 2 bad descriptor or configuration, 3 budget
//! exceeded, 4 disagreement between the polynomial test and the hull oracle.

pub mod descriptor;
pub mod parallel;
pub mod report;
pub mod search_io;

use qclcd_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Descriptor(String),
    #[error("{0}")]
    Config(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Descriptor(_) | CliError::Config(_) | CliError::Io { .. } => 2,
            CliError::Core(Error::BudgetExceeded { .. }) => 3,
            CliError::Core(Error::Inconsistent(_)) | CliError::Mismatch(_) => 4,
            CliError::Core(_) => 2,
        }
    }
}

pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

pub fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_string(), msg: e.to_string() })
}
