use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::AnalyticError;

/// Tolerance used by the balanced-configuration predicate.
const BALANCE_TOL: f64 = 1e-12;

/// Full parameter set of the two-OPA interferometer with a nonlinear phase
/// element of order `k` on the internal mode b.
///
/// The two OPAs implement S(xi_j) = exp(xi_j* a b - xi_j a† b†) with
/// xi_j = g_j e^{i theta_j}; the coherent input on mode a is
/// alpha = alpha_abs * e^{i theta_alpha}; the probe phase element is
/// exp(i phi (b†b)^k).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferometerConfig {
    /// First OPA gain factor (>= 0).
    pub g1: f64,
    /// Second OPA gain factor (>= 0).
    pub g2: f64,
    /// First OPA pump phase (radians).
    pub theta1: f64,
    /// Second OPA pump phase (radians).
    pub theta2: f64,
    /// Coherent-input amplitude magnitude |alpha| (>= 0).
    pub alpha_abs: f64,
    /// Coherent-input phase theta_alpha (radians).
    pub theta_alpha: f64,
    /// Nonlinearity order of the phase element: 1 (linear) or 2 (quadratic Kerr).
    pub k: u8,
    /// Probe phase (radians).
    pub phi: f64,
}

impl Default for InterferometerConfig {
    fn default() -> Self {
        Self::balanced(1.0, 1.0, PI / 2.0, 2, 0.0)
    }
}

/// Distance of `x` from 0 modulo 2*pi.
fn angle_dist(x: f64) -> f64 {
    let r = x.rem_euclid(2.0 * PI);
    r.min(2.0 * PI - r)
}

impl InterferometerConfig {
    /// Balanced configuration in the standard convention theta1 = 0,
    /// theta2 = pi, g2 = g1.
    pub fn balanced(g: f64, alpha_abs: f64, theta_alpha: f64, k: u8, phi: f64) -> Self {
        Self {
            g1: g,
            g2: g,
            theta1: 0.0,
            theta2: PI,
            alpha_abs,
            theta_alpha,
            k,
            phi,
        }
    }

    /// Complex coherent amplitude alpha = |alpha| e^{i theta_alpha}.
    pub fn alpha(&self) -> Complex64 {
        Complex64::from_polar(self.alpha_abs, self.theta_alpha)
    }

    /// True iff theta2 - theta1 = pi (mod 2pi) and g1 = g2, i.e. the second
    /// OPA inverts the first at phi = 0.
    pub fn is_balanced(&self) -> bool {
        angle_dist(self.theta2 - self.theta1 - PI) <= BALANCE_TOL
            && (self.g1 - self.g2).abs() <= BALANCE_TOL * self.g1.abs().max(1.0)
    }

    /// Basic domain validation shared by all closed forms.
    pub fn validate(&self) -> Result<(), AnalyticError> {
        for (name, v) in [
            ("g1", self.g1),
            ("g2", self.g2),
            ("theta1", self.theta1),
            ("theta2", self.theta2),
            ("alpha_abs", self.alpha_abs),
            ("theta_alpha", self.theta_alpha),
            ("phi", self.phi),
        ] {
            if !v.is_finite() {
                return Err(AnalyticError::InvalidParameter(format!(
                    "{name} must be finite, got {v}"
                )));
            }
        }
        if self.g1 < 0.0 || self.g2 < 0.0 {
            return Err(AnalyticError::InvalidParameter(format!(
                "gain factors must be >= 0, got g1={}, g2={}",
                self.g1, self.g2
            )));
        }
        if self.alpha_abs < 0.0 {
            return Err(AnalyticError::InvalidParameter(format!(
                "alpha_abs must be >= 0, got {}",
                self.alpha_abs
            )));
        }
        if !matches!(self.k, 1 | 2) {
            return Err(AnalyticError::UnsupportedK(self.k));
        }
        Ok(())
    }

    /// The closed forms in this crate are derived in the convention
    /// theta1 = 0, theta2 = pi; enforce it together with the balance predicate.
    pub fn require_standard_balanced(&self) -> Result<(), AnalyticError> {
        if !self.is_balanced() {
            return Err(AnalyticError::NotBalanced(format!(
                "theta2 - theta1 = {} (need pi mod 2pi), g1 = {}, g2 = {}",
                self.theta2 - self.theta1,
                self.g1,
                self.g2
            )));
        }
        if angle_dist(self.theta1) > 1e-9 {
            return Err(AnalyticError::NotBalanced(format!(
                "theta1 = {} (closed forms are derived at theta1 = 0)",
                self.theta1
            )));
        }
        Ok(())
    }
}

/// Transmissivities of the fictitious beam splitters modeling photon loss:
/// `t1` acts on both modes between the first OPA and the phase element,
/// `t2` acts after the second OPA.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossConfig {
    pub t1: f64,
    pub t2: f64,
}

impl Default for LossConfig {
    fn default() -> Self {
        Self { t1: 1.0, t2: 1.0 }
    }
}

impl LossConfig {
    pub fn new(t1: f64, t2: f64) -> Self {
        Self { t1, t2 }
    }

    pub fn validate(&self) -> Result<(), AnalyticError> {
        if !(self.t1 > 0.0 && self.t1 <= 1.0) || !self.t1.is_finite() {
            return Err(AnalyticError::InvalidT {
                name: "T1",
                value: self.t1,
            });
        }
        if !(self.t2 > 0.0 && self.t2 <= 1.0) || !self.t2.is_finite() {
            return Err(AnalyticError::InvalidT {
                name: "T2",
                value: self.t2,
            });
        }
        Ok(())
    }

    /// True when both channels are fully transmissive.
    pub fn is_lossless(&self) -> bool {
        self.t1 == 1.0 && self.t2 == 1.0
    }
}
