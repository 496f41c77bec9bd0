//! Closed-form building blocks of the homodyne signal for the quadratic
//! (k = 2) Kerr phase element in a balanced interferometer, valid at
//! arbitrary probe phase phi.
//!
//! The characteristic-function calculation organizes the output quadrature
//! mean and second moment into a handful of complex terms built from
//!
//! ```text
//! u      = -e^{-i phi} sinh^2 g
//! chi(p) = 1 / (cosh^2 g - e^{2 i p} sinh^2 g)
//! Ibar(p)= chi(p)^2 exp(|alpha|^2 (chi(p) - 1))
//! ```
//!
//! `UV_sq + Obar` is the second moment of the (unit-vacuum-variance
//! normalized) output quadrature and `2 Re(Z3 Z4)` is its phi-derivative, so
//! the phase sensitivity is sqrt(UV_sq + Obar) / |2 Re(Z3 Z4)|. Because the
//! sensitivity is invariant under a global rescaling of the quadrature, the
//! normalization convention cancels there.

use num_complex::Complex64;

use crate::config::InterferometerConfig;
use crate::error::AnalyticError;

/// Complex terms of the quadratic-Kerr homodyne signal at one (g, alpha, phi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureTerms {
    /// -e^{-i phi} sinh^2 g.
    pub u: Complex64,
    /// chi evaluated at phi.
    pub chi: Complex64,
    /// Ibar evaluated at phi.
    pub ibar: Complex64,
    /// Cross term linear in the coherent amplitude squared.
    pub z1: Complex64,
    /// Cross term quadratic in the coherent amplitude.
    pub z2: Complex64,
    /// Mean-field factor of the signal derivative.
    pub z3: Complex64,
    /// Envelope factor of the signal derivative.
    pub z4: Complex64,
    /// |U|^2 + |V|^2: the displacement-independent part of the second moment.
    pub uv_sq: f64,
    /// Displacement-dependent part of the second moment.
    pub obar: f64,
}

impl QuadratureTerms {
    /// Second moment of the normalized output quadrature.
    pub fn second_moment(&self) -> f64 {
        self.uv_sq + self.obar
    }

    /// phi-derivative of the normalized output-quadrature mean.
    pub fn slope(&self) -> f64 {
        2.0 * (self.z3 * self.z4).re
    }
}

/// Evaluate the quadratic-Kerr signal terms for a balanced configuration.
///
/// Requires the standard balanced convention (theta1 = 0, theta2 = pi,
/// g1 = g2); the terms depend on the configuration only through g, |alpha|,
/// theta_alpha and phi. The chi denominators cannot vanish for real g and
/// phi, but are guarded against anyway.
pub fn quadrature_terms(config: &InterferometerConfig) -> Result<QuadratureTerms, AnalyticError> {
    config.validate()?;
    config.require_standard_balanced()?;

    let g = config.g1;
    let phi = config.phi;
    let aa2 = config.alpha_abs * config.alpha_abs;
    let alpha = config.alpha();

    let ch2 = g.cosh() * g.cosh();
    let sh2 = g.sinh() * g.sinh();

    let chi_at = |p: f64| -> Result<Complex64, AnalyticError> {
        let den = Complex64::new(ch2, 0.0) - Complex64::from_polar(sh2, 2.0 * p);
        if den.norm() < 1e-14 {
            return Err(AnalyticError::Pole(den.norm()));
        }
        Ok(den.inv())
    };
    let ibar_at = |chi: Complex64| -> Complex64 { chi * chi * (aa2 * (chi - 1.0)).exp() };

    let chi = chi_at(phi)?;
    let ibar = ibar_at(chi);
    let chi2p = chi_at(2.0 * phi)?;
    let ibar2p = ibar_at(chi2p);

    let u = -Complex64::from_polar(sh2, -phi);
    let e_i_phi = Complex64::from_polar(1.0, phi);
    let e_2i_phi = Complex64::from_polar(1.0, 2.0 * phi);

    let z1 = 2.0 * (aa2 + alpha.conj() * alpha.conj()) * u.conj() * ibar * (chi - 1.0) * ch2;
    let z2 = alpha * alpha * u * u
        * (e_2i_phi.conj() * chi2p.conj() * ibar2p.conj() - ibar.conj() * ibar.conj());

    let ch2g = (2.0 * g).cosh();
    let sh2g = (2.0 * g).sinh();
    let uv_sq = ch2g * ch2g - (e_i_phi * ibar).re * sh2g * sh2g;
    let obar = 2.0 * aa2 * u.norm_sqr() * (1.0 - ibar.norm_sqr()) + 2.0 * (z1 + z2).re;

    let z3 = Complex64::new(0.0, 1.0) * alpha.conj() * u.conj() * ibar;
    let z4 = Complex64::new(1.0, 0.0)
        + 4.0 * e_2i_phi * u.norm() * chi
        + 2.0 * aa2 * e_2i_phi * u.norm() * chi * chi;

    Ok(QuadratureTerms {
        u,
        chi,
        ibar,
        z1,
        z2,
        z3,
        z4,
        uv_sq,
        obar,
    })
}
