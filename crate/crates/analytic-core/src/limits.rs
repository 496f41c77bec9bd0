//! Total photon number and the benchmark sensitivity limits.

use crate::config::InterferometerConfig;
use crate::error::AnalyticError;

/// Total mean photon number inside the interferometer after the first OPA:
/// N_Total = |alpha|^2 cosh 2g + 2 sinh^2 g.
pub fn n_total(config: &InterferometerConfig) -> f64 {
    let g = config.g1;
    config.alpha_abs * config.alpha_abs * (2.0 * g).cosh() + 2.0 * g.sinh().powi(2)
}

/// Standard quantum limit, Heisenberg limit and super-Heisenberg limit for a
/// given total photon number: (1/sqrt(N), 1/N, 1/N^2).
pub fn limits(n_total: f64) -> Result<(f64, f64, f64), AnalyticError> {
    if !(n_total > 0.0) || !n_total.is_finite() {
        return Err(AnalyticError::NonpositiveN(n_total));
    }
    Ok((1.0 / n_total.sqrt(), 1.0 / n_total, 1.0 / (n_total * n_total)))
}

/// Quantum Cramer-Rao bound 1/sqrt(trials * F) for Fisher information `f`
/// over `trials` independent repetitions.
pub fn qcrb(f: f64, trials: u64) -> Result<f64, AnalyticError> {
    if trials < 1 {
        return Err(AnalyticError::BadTrials(trials));
    }
    if !(f > 0.0) || !f.is_finite() {
        return Err(AnalyticError::NonpositiveF(f));
    }
    Ok(1.0 / (trials as f64 * f).sqrt())
}
