use thiserror::Error;

/// Errors raised by the truncated-Fock-space oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    /// The adaptive cutoff policy hit the hard cap while the truncation tail
    /// still exceeded its tolerance.
    #[error("cutoff too small: boundary occupancy {tail:.3e} exceeds {tol:.3e} at the n_max={n_max} hard cap")]
    CutoffTooSmall { n_max: usize, tail: f64, tol: f64 },

    /// The requested cutoff exceeds a cost guard for this operation.
    #[error("cutoff too large: n_max={n_max} exceeds the limit {max} for this operation")]
    CutoffTooLarge { n_max: usize, max: usize },

    /// Only k = 1 and k = 2 phase elements are modeled.
    #[error("unsupported nonlinearity order k={0}; only k=1 and k=2 are modeled")]
    UnsupportedK(u8),

    /// Transmissivity outside (0, 1].
    #[error("invalid transmissivity T={0}; must lie in (0, 1]")]
    InvalidT(f64),

    /// The signal slope vanishes: error propagation undefined.
    #[error("zero derivative: |d<X>/dphi| = {0:.3e} < 1e-12; sensitivity undefined at a stationary point")]
    ZeroDerivative(f64),

    /// Finite-difference step outside the supported bracket.
    #[error("finite-difference step h={0:.3e} outside [1e-6, 1e-2]")]
    BadStep(f64),

    /// Doubling the cutoff moved a reported quantity by more than the moment
    /// tolerance: the result is not trustworthy and is never returned
    /// silently.
    #[error("not converged: doubling the cutoff changed the result by {dev:.3e} relative (tolerance {tol:.3e})")]
    NotConverged { dev: f64, tol: f64 },

    /// The symmetric eigensolver failed to converge (should not happen for
    /// the well-conditioned matrices used here).
    #[error("eigensolver failed to converge")]
    EigenFailure,

    /// A state or density matrix failed validation.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Error propagated from the closed-form layer (configuration checks).
    #[error("configuration error: {0}")]
    Config(#[from] analytic_core::AnalyticError),
}
