//! Verification harness: runs each statement's prediction against a
//! linear-algebra witness and stores the reports.

pub mod config;
pub mod report;
pub mod store;
pub mod suite;
pub mod tasks;

pub use config::Config;
pub use report::{Format, Report, Task, Verdict};
pub use tasks::{resolve, run, Request, Statement};

/// Environment variable naming the results directory.
pub const RESULTS_ENV: &str = "MINOREL_RESULTS_DIR";

#[derive(Debug, thiserror::Error)]
pub enum VerifierError {
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] minorel_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

