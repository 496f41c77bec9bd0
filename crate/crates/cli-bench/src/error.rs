//! Process-level error classification.
//!
//! Every failure funnels into one of three exit classes:
//!
//! * `Usage` (exit 1) — bad flags, bad config files, domain errors in the
//!   requested parameters, i/o problems;
//! * `Verification` (exit 2) — a verified invariant was breached;
//! * `NonConvergence` (exit 3) — the truncated-Fock oracle could not certify
//!   its result (cutoff growth exhausted, confirmation failed, eigensolver
//!   failure, degenerate variational system).

use analytic_core::AnalyticError;
use fock_oracle::OracleError;
use lossy_qfi::LossyQfiError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    NonConvergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification(_) => 2,
            CliError::NonConvergence(_) => 3,
        }
    }
}

impl From<AnalyticError> for CliError {
    fn from(e: AnalyticError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::NotConverged { .. }
            | OracleError::CutoffTooSmall { .. }
            | OracleError::CutoffTooLarge { .. }
            | OracleError::EigenFailure
            | OracleError::InvalidState(_) => CliError::NonConvergence(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LossyQfiError> for CliError {
    fn from(e: LossyQfiError) -> Self {
        match e {
            LossyQfiError::DegenerateSystem { .. } => CliError::NonConvergence(e.to_string()),
            LossyQfiError::InconsistentMoments(_) => CliError::Verification(e.to_string()),
            LossyQfiError::InvalidEta(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("i/o error: {e}"))
    }
}
