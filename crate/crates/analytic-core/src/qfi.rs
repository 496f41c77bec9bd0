//! Quantum Fisher information of the ideal (lossless) probe state, for the
//! Kerr-interferometer input and for the reference input classes used as
//! baselines.

use crate::config::InterferometerConfig;
use crate::error::AnalyticError;
use crate::special::abar;

/// (F1, F2) at gain `g` and coherent amplitude `alpha_abs`:
/// F1 = 4 (A2 + A1 - A1^2) is the linear-phase QFI 4 Var(n) and
/// F2 = F1 + 4 [A4 + 6 (A3 + A2) - A2 (A2 + 2 A1)] is the quadratic-Kerr
/// QFI 4 Var(n^2), both on the internal mode after the first OPA.
pub fn qfi_ideal_parts(g: f64, alpha_abs: f64) -> (f64, f64) {
    let a1 = abar(1, g, alpha_abs);
    let a2 = abar(2, g, alpha_abs);
    let a3 = abar(3, g, alpha_abs);
    let a4 = abar(4, g, alpha_abs);
    let f1 = 4.0 * (a2 + a1 - a1 * a1);
    let f2 = f1 + 4.0 * (a4 + 6.0 * (a3 + a2) - a2 * (a2 + 2.0 * a1));
    (f1, f2)
}

/// QFI of the lossless probe for phase order `k` (1 or 2).
pub fn qfi_ideal(config: &InterferometerConfig, k: u8) -> Result<f64, AnalyticError> {
    let (f1, f2) = qfi_ideal_parts(config.g1, config.alpha_abs);
    match k {
        1 => Ok(f1),
        2 => Ok(f2),
        other => Err(AnalyticError::UnsupportedK(other)),
    }
}

/// Reference input classes whose linear-phase QFI has a closed form:
/// coherent ⊗ coherent and coherent ⊗ squeezed-vacuum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BaselineInput {
    /// |alpha> on mode a and |beta> on mode b.
    CsCs { alpha_abs: f64, beta_abs: f64 },
    /// |alpha> on mode a and squeezed vacuum with squeeze parameter r on mode b.
    CsSvs { alpha_abs: f64, r: f64 },
}

impl BaselineInput {
    /// Mean input photon number |alpha|^2 + |beta|^2 (or sinh^2 r).
    pub fn n_input(&self) -> f64 {
        match *self {
            BaselineInput::CsCs {
                alpha_abs,
                beta_abs,
            } => alpha_abs * alpha_abs + beta_abs * beta_abs,
            BaselineInput::CsSvs { alpha_abs, r } => {
                alpha_abs * alpha_abs + r.sinh() * r.sinh()
            }
        }
    }
}

/// Lossless linear-phase QFI for the reference input classes inside the same
/// balanced interferometer at gain `g`.
pub fn qfi_baseline_ideal(input: &BaselineInput, g: f64) -> f64 {
    let ch2g = (2.0 * g).cosh();
    let sh2g = (2.0 * g).sinh();
    let ch4g = (4.0 * g).cosh();
    match *input {
        BaselineInput::CsCs {
            alpha_abs: a,
            beta_abs: b,
        } => {
            (a * a + b * b) * ch4g + sh2g * sh2g + 2.0 * a * b * (4.0 * g).sinh() + a * a
                + b * b
                - 2.0 * (a * a - b * b) * ch2g
        }
        BaselineInput::CsSvs { alpha_abs: a, r } => {
            let sh2r = (2.0 * r).sinh();
            ch2g * ch2g * (0.5 * sh2r * sh2r + a * a)
                + sh2g * sh2g * (a * a * (2.0 * r).exp() + r.cosh() * r.cosh())
                + a * a * (1.0 - 2.0 * ch2g)
                + 0.25 * ((4.0 * r).cosh() - 1.0) * (2.0 * ch2g + 1.0)
        }
    }
}

/// Mean intra-interferometer photon number after the first OPA for the
/// reference input classes (used by the lossy baselines).
pub fn baseline_mean_photon(input: &BaselineInput, g: f64) -> f64 {
    let sh = g.sinh();
    let ch = g.cosh();
    match *input {
        BaselineInput::CsCs {
            alpha_abs: a,
            beta_abs: b,
        } => (a * sh + b * ch).powi(2) + sh * sh,
        BaselineInput::CsSvs { alpha_abs: a, r } => {
            (a * a + 1.0) * sh * sh + ch * ch * r.sinh() * r.sinh()
        }
    }
}
