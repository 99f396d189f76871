//! Command-line harness around `satake-core`: verification sweeps that write
//! JSON or CSV reports, and one-shot computations printed as JSON.

pub mod compute;
pub mod config;
pub mod encode;
pub mod report;
pub mod suites;

use thiserror::Error;

pub use compute::{compute, ComputeCommand};
pub use config::{OutputFormat, Suite, SweepConfig};
pub use report::{CaseRecord, VerificationReport};
pub use suites::run_suite;

/// Everything that maps to the usage/IO exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] satake_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Environment variable naming the default directory for report files.
pub const OUT_DIR_ENV: &str = "SATAKE_GL2_OUT_DIR";
