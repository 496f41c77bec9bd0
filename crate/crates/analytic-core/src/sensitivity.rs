//! Closed-form homodyne phase sensitivities (error propagation on the output
//! quadrature of mode a), lossless and lossy.

use crate::config::{InterferometerConfig, LossConfig};
use crate::error::AnalyticError;
use crate::fault_points;
use crate::quadrature::quadrature_terms;

/// Slope magnitudes below this raise a zero-derivative error.
const SLOPE_FLOOR: f64 = 1e-12;

/// Phase sensitivity from error propagation at the configured probe phase,
/// valid for arbitrary phi (not just the optimal point).
///
/// k = 1: the variance is 1 + 2 sinh^2(2g) sin^2(phi/2) and the slope is
/// 2 sinh^2(g) |alpha| sin(theta_alpha - phi) in the unit-vacuum-variance
/// normalization. k = 2 uses the full quadrature-term machinery. The
/// normalization cancels in the ratio, so the value is convention-free.
pub fn sensitivity_analytic(config: &InterferometerConfig) -> Result<f64, AnalyticError> {
    config.validate()?;
    config.require_standard_balanced()?;
    let g = config.g1;
    match config.k {
        1 => {
            let s2g = (2.0 * g).sinh();
            let half = (config.phi / 2.0).sin();
            let var = 1.0 + 2.0 * s2g * s2g * half * half;
            let slope = 2.0 * g.sinh().powi(2)
                * config.alpha_abs
                * (config.theta_alpha - config.phi).sin();
            if slope.abs() < SLOPE_FLOOR {
                return Err(AnalyticError::ZeroDerivative(format!(
                    "|d<X>/dphi| = {:.3e}",
                    slope.abs()
                )));
            }
            Ok(var.max(0.0).sqrt() / slope.abs())
        }
        2 => {
            let terms = quadrature_terms(config)?;
            let slope = terms.slope();
            if slope.abs() < SLOPE_FLOOR {
                return Err(AnalyticError::ZeroDerivative(format!(
                    "|d<X>/dphi| = {:.3e}",
                    slope.abs()
                )));
            }
            Ok(terms.second_moment().max(0.0).sqrt() / slope.abs())
        }
        k => Err(AnalyticError::UnsupportedK(k)),
    }
}

/// Shared domain checks for the optimal-point (phi = 0) forms.
fn check_optimal_domain(config: &InterferometerConfig) -> Result<(), AnalyticError> {
    config.validate()?;
    config.require_standard_balanced()?;
    if config.theta_alpha.sin().abs() < SLOPE_FLOOR {
        return Err(AnalyticError::ZeroDerivative(
            "sin(theta_alpha) = 0 makes the optimal-point slope vanish".into(),
        ));
    }
    if config.alpha_abs <= 0.0 {
        return Err(AnalyticError::ZeroDerivative(
            "|alpha| = 0 makes the optimal-point slope vanish".into(),
        ));
    }
    if config.g1 <= 0.0 {
        return Err(AnalyticError::ZeroDerivative(
            "g = 0 makes the optimal-point slope vanish".into(),
        ));
    }
    Ok(())
}

/// Enhancement factor 1 + N_OPA (N_alpha + 2) that the quadratic Kerr
/// element contributes to the optimal-point slope.
fn kerr_gain(config: &InterferometerConfig) -> f64 {
    let n_alpha = config.alpha_abs * config.alpha_abs;
    let n_opa = 2.0 * config.g1.sinh().powi(2);
    1.0 + n_opa * (n_alpha + 2.0)
}

/// Optimal-point (phi = 0) sensitivity. For k = 1 this is
/// 1 / (sqrt(N_alpha) N_OPA |sin theta_alpha|) with N_alpha = |alpha|^2 and
/// N_OPA = 2 sinh^2 g; for k = 2 it is divided by 1 + N_OPA (N_alpha + 2).
///
/// Evaluated at phi = 0 regardless of the `phi` stored in the configuration.
pub fn sensitivity_optimal(config: &InterferometerConfig) -> Result<f64, AnalyticError> {
    check_optimal_domain(config)?;
    let n_opa = 2.0 * config.g1.sinh().powi(2);
    // Associated as (1 / (|alpha| N_OPA)) / |sin| so that the T1 = T2 = 1
    // limit of `sensitivity_lossy_optimal` reproduces this value bit for bit:
    // there the radicand reduces to d1^2 with a vanished bracket, and IEEE
    // square root returns |d1| exactly.
    let d1 = 1.0 / (config.alpha_abs * n_opa) / config.theta_alpha.sin().abs();
    match config.k {
        1 => Ok(d1),
        2 => Ok(d1 / kerr_gain(config)),
        k => Err(AnalyticError::UnsupportedK(k)),
    }
}

/// Optimal-point sensitivity with internal (T1) and external (T2) photon
/// loss:
///
/// ```text
/// dphi_L1 = sqrt(dphi_1^2 + [(1 - T1) T2 cosh 2g + 1 - T2] /
///                           (4 T1 T2 |alpha|^2 sinh^4 g)) / |sin theta_alpha|
/// dphi_L2 = dphi_L1 / (1 + N_OPA (N_alpha + 2))
/// ```
///
/// where dphi_1 is the lossless k = 1 value at theta_alpha = pi/2. The slope
/// carries the full sin(theta_alpha) dependence while the variance does not,
/// so the angular factor divides the whole radicand; at theta_alpha = pi/2 it
/// is inert. T1 = T2 = 1 reproduces the lossless expression exactly (the
/// bracket vanishes).
pub fn sensitivity_lossy_optimal(
    config: &InterferometerConfig,
    loss: &LossConfig,
) -> Result<f64, AnalyticError> {
    loss.validate()?;
    check_optimal_domain(config)?;
    let g = config.g1;
    let aa2 = config.alpha_abs * config.alpha_abs;
    let n_opa = 2.0 * g.sinh().powi(2);
    let d1 = 1.0 / (config.alpha_abs * n_opa);
    let bracket = ((1.0 - loss.t1) * loss.t2 * (2.0 * g).cosh() + 1.0 - loss.t2)
        * fault_points::lossy_bracket_scale();
    let s4 = g.sinh().powi(4);
    let dl1 =
        (d1 * d1 + bracket / (4.0 * loss.t1 * loss.t2 * aa2 * s4)).sqrt()
            / config.theta_alpha.sin().abs();
    match config.k {
        1 => Ok(dl1),
        2 => Ok(dl1 / kerr_gain(config)),
        k => Err(AnalyticError::UnsupportedK(k)),
    }
}
