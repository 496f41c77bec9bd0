//! Closed-form results for a balanced SU(1,1) interferometer whose internal
//! mode passes through a linear (k = 1) or quadratic Kerr (k = 2) phase
//! element: homodyne phase sensitivities at arbitrary probe phase, their
//! optimal-point and photon-loss variants, quantum Fisher information of the
//! probe state, reference-input baselines, and the benchmark limits
//! (SQL / HL / super-HL).
//!
//! Everything here is a pure function of plain values and safe to evaluate
//! concurrently over parameter grids. Numerical cross-checks against a
//! truncated-Fock-space oracle live in the companion crates.

pub mod config;
pub mod error;
pub mod fault_points;
pub mod limits;
pub mod qfi;
pub mod quadrature;
pub mod sensitivity;
pub mod special;

pub use config::{InterferometerConfig, LossConfig};
pub use error::AnalyticError;
pub use limits::{limits, n_total, qcrb};
pub use qfi::{baseline_mean_photon, qfi_baseline_ideal, qfi_ideal, qfi_ideal_parts, BaselineInput};
pub use quadrature::{quadrature_terms, QuadratureTerms};
pub use sensitivity::{sensitivity_analytic, sensitivity_lossy_optimal, sensitivity_optimal};
pub use special::{abar, laguerre};
