use thiserror::Error;

/// Errors raised by the closed-form layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticError {
    /// The requested expression is only valid in the balanced convention
    /// (theta1 = 0, theta2 = pi mod 2pi, g1 = g2).
    #[error("configuration is not balanced in the required convention (theta1 = 0, theta2 = pi mod 2pi, g1 = g2): {0}")]
    NotBalanced(String),

    /// Only linear (k=1) and quadratic (k=2) nonlinear phase elements are modeled.
    #[error("unsupported nonlinearity order k={0}; only k=1 and k=2 are modeled")]
    UnsupportedK(u8),

    /// The signal slope vanishes, so error propagation is undefined.
    #[error("zero derivative: {0}; phase sensitivity is undefined at a stationary point")]
    ZeroDerivative(String),

    /// The chi denominator is numerically singular.
    #[error("quadrature-term pole: |cosh^2 g - e^(2 i phi) sinh^2 g| = {0:.3e} < 1e-14")]
    Pole(f64),

    /// Benchmark limits need a positive photon number.
    #[error("total photon number must be positive, got {0}")]
    NonpositiveN(f64),

    /// A Cramer-Rao bound needs positive Fisher information.
    #[error("Fisher information must be positive, got {0}")]
    NonpositiveF(f64),

    /// The number of repeated trials must be at least one.
    #[error("number of trials must be >= 1, got {0}")]
    BadTrials(u64),

    /// A transmissivity lies outside (0, 1].
    #[error("invalid transmissivity {name}={value}; must lie in (0, 1]")]
    InvalidT { name: &'static str, value: f64 },

    /// Generic domain violation (non-finite or out-of-range parameter).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
