//! Upper bound on the quantum Fisher information of the Kerr-interferometer
//! probe under photon loss on the internal mode, obtained by minimizing over
//! a two-parameter family of Kraus representations of the loss channel
//! (a purification bound), plus the lossy linear-phase baselines.
//!
//! The variational family is parameterized by (mu1, mu2); (0, 0) corresponds
//! to loss occurring before the nonlinear phase element and (-1, -1) to loss
//! after it. The bound C_Q is a quadratic form in six photon-number moments
//! of the probe, with polynomial coefficients in (eta, mu1, mu2).

use thiserror::Error;

use analytic_core::qfi::{baseline_mean_photon, qfi_baseline_ideal, BaselineInput};
use analytic_core::{abar, qfi_ideal_parts};

/// Errors raised by the purification-bound layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LossyQfiError {
    /// Channel transmissivity outside (0, 1].
    #[error("invalid channel transmissivity eta={0}; must lie in (0, 1]")]
    InvalidEta(f64),

    /// The linear system for the optimal variational parameters is singular.
    #[error("degenerate stationarity system: |A*D - 2 eta B^2| = {den:.3e} < 1e-14 * |A*D| = {scale:.3e}")]
    DegenerateSystem { den: f64, scale: f64 },

    /// A moment vector failed its internal-consistency invariants.
    #[error("inconsistent moment vector: {0}")]
    InconsistentMoments(String),
}

/// Photon-loss channel on the internal mode with variational Kraus
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelLoss {
    /// Transmissivity in (0, 1].
    pub eta: f64,
    /// First variational parameter.
    pub mu1: f64,
    /// Second variational parameter.
    pub mu2: f64,
}

impl ChannelLoss {
    /// Loss placed before the phase element: (mu1, mu2) = (0, 0).
    pub fn before_phase(eta: f64) -> Self {
        Self {
            eta,
            mu1: 0.0,
            mu2: 0.0,
        }
    }

    /// Loss placed after the phase element: (mu1, mu2) = (-1, -1).
    pub fn after_phase(eta: f64) -> Self {
        Self {
            eta,
            mu1: -1.0,
            mu2: -1.0,
        }
    }

    pub fn validate(&self) -> Result<(), LossyQfiError> {
        if !(self.eta > 0.0 && self.eta <= 1.0) || !self.eta.is_finite() {
            return Err(LossyQfiError::InvalidEta(self.eta));
        }
        if !self.mu1.is_finite() || !self.mu2.is_finite() {
            return Err(LossyQfiError::InvalidEta(f64::NAN));
        }
        Ok(())
    }
}

/// The six photon-number moments of the probe that enter the bound:
/// (Var(n^2), <n^3>, <n^2>, <n>, <n^2><n>, <n>^2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentVector {
    pub h: [f64; 6],
}

impl MomentVector {
    /// All-zero moments: the probe carries no photons and no phase
    /// information.
    pub fn is_information_free(&self) -> bool {
        self.h.iter().all(|&x| x == 0.0)
    }

    /// Internal consistency: h5 = h3 * h4 and h6 = h4^2 within 1e-10
    /// relative, and h1 = Var(n^2) >= 0.
    pub fn validate(&self) -> Result<(), LossyQfiError> {
        let [h1, _, h3, h4, h5, h6] = self.h;
        let rel = |x: f64, y: f64| (x - y).abs() / y.abs().max(1e-300);
        if h1 < 0.0 {
            return Err(LossyQfiError::InconsistentMoments(format!(
                "h1 = Var(n^2) = {h1} < 0"
            )));
        }
        if self.is_information_free() {
            return Ok(());
        }
        if rel(h5, h3 * h4) > 1e-10 {
            return Err(LossyQfiError::InconsistentMoments(format!(
                "h5 = {h5} but h3*h4 = {}",
                h3 * h4
            )));
        }
        if rel(h6, h4 * h4) > 1e-10 {
            return Err(LossyQfiError::InconsistentMoments(format!(
                "h6 = {h6} but h4^2 = {}",
                h4 * h4
            )));
        }
        Ok(())
    }
}

/// Moment vector of the probe state after the first OPA at gain `g` with
/// coherent input `alpha_abs`, assembled from the normally-ordered moments.
pub fn moment_vector(g: f64, alpha_abs: f64) -> MomentVector {
    if g == 0.0 {
        // No photons ever enter mode b: every moment vanishes identically.
        return MomentVector { h: [0.0; 6] };
    }
    let a1 = abar(1, g, alpha_abs);
    let a2 = abar(2, g, alpha_abs);
    let a3 = abar(3, g, alpha_abs);
    let (_, f2) = qfi_ideal_parts(g, alpha_abs);
    let n1 = a1;
    let n2 = a2 + a1;
    let n3 = a3 + 3.0 * a2 + a1;
    MomentVector {
        h: [f2 / 4.0, n3, n2, n1, n2 * n1, n1 * n1],
    }
}

/// The seven scalar polynomials in (mu1, mu2) underlying the bound
/// coefficients.
fn w_small(mu1: f64, mu2: f64) -> [f64; 7] {
    let w1 = 1.0 + 2.0 * mu1 - mu2;
    let w2 = mu1 - mu2;
    let w3 = 1.0 + 2.0 * (3.0 * mu1 - 2.0 * mu2) + (2.0 * mu1 - mu2) * (4.0 * mu1 - 3.0 * mu2);
    let w4 = 7.0 * mu2 - 6.0 * mu1 + 24.0 * mu1 * mu2 - 14.0 * mu1 * mu1 - 9.0 * mu2 * mu2;
    let w5 = mu2 * w1 - 2.0 * w2 * w2;
    let w6 = 9.0 + 40.0 * mu1 - 22.0 * mu2 + 44.0 * mu1 * mu1 - 48.0 * mu1 * mu2
        + 13.0 * mu2 * mu2;
    let w7 = 7.0 + 40.0 * mu1 - 26.0 * mu2 + 52.0 * mu1 * mu1 - 64.0 * mu1 * mu2
        + 19.0 * mu2 * mu2;
    [w1, w2, w3, w4, w5, w6, w7]
}

/// The six moment coefficients W1..W6 of the bound at (eta, mu1, mu2).
fn w_big(eta: f64, mu1: f64, mu2: f64) -> [f64; 6] {
    let [w1, w2, w3, w4, w5, w6, w7] = w_small(mu1, mu2);
    let e2 = eta * eta;
    let big1 = w1 * e2 - 2.0 * w2 * eta - mu2;
    let big2 = 2.0 * eta * (3.0 * w1 * w1 * eta * e2 - 3.0 * w3 * e2 - w4 * eta + w5);
    let big3 = eta * (11.0 * w1 * w1 * eta * e2 - 2.0 * w6 * e2 + w7 * eta - 4.0 * w1 * w2);
    let big4 = eta * (6.0 * eta * e2 - 12.0 * e2 + 7.0 * eta - 1.0) * w1 * w1;
    let big5 = 2.0 * eta * (1.0 - eta) * w1 * big1;
    let big6 = e2 * (1.0 - eta) * (1.0 - eta) * w1 * w1;
    [big1, big2, big3, big4, big5, big6]
}

/// The variational upper bound C_Q on the lossy QFI at the given channel
/// parameters:
/// C_Q = 4 (W1^2 h1 - W2 h2 + W3 h3 - W4 h4 - W5 h5 - W6 h6).
///
/// At (mu1, mu2) = (-1, -1) every coefficient except W1 = 1 vanishes, so the
/// bound collapses to 4 h1 = F2 for every eta (loss after the phase element
/// commutes past it without degrading a number-diagonal encoding's
/// information ceiling in this family).
pub fn cq_bound(h: &MomentVector, loss: &ChannelLoss) -> Result<f64, LossyQfiError> {
    loss.validate()?;
    let [w1, w2, w3, w4, w5, w6] = w_big(loss.eta, loss.mu1, loss.mu2);
    let hh = &h.h;
    Ok(4.0
        * (w1 * w1 * hh[0] - w2 * hh[1] + w3 * hh[2] - w4 * hh[3] - w5 * hh[4] - w6 * hh[5]))
}

/// Stationary point of C_Q over (mu1, mu2) from the closed-form linear
/// system. Returns the defined-by-convention (0, 0) for an information-free
/// moment vector.
pub fn optimal_mu(h: &MomentVector, eta: f64) -> Result<(f64, f64), LossyQfiError> {
    ChannelLoss::before_phase(eta).validate()?;
    if h.is_information_free() {
        return Ok((0.0, 0.0));
    }
    let a1 = eta - 1.0;
    let a2 = 6.0 * eta * eta - 6.0 * eta + 1.0;
    let a3 = 11.0 * eta * eta - 11.0 * eta + 2.0;
    let a4 = 2.0 * eta - 1.0;

    let b1 = [eta * a1, -a2, a3, -a2, 2.0 * eta * a1, -eta * a1];
    let b2 = [a1 * a1, -3.0 * a1 * a4, a3 - a4, -a2, a1 * a4, -eta * a1];
    let b3 = [eta * eta, -3.0 * eta * a4, a3 + a4, -a2, eta * a4, -eta * a1];
    let b4 = [
        a1 * a1 * a1,
        -6.0 * eta * a1 * a1,
        eta * (a3 - 2.0 * a4),
        -eta * a2,
        2.0 * eta * a1 * a1,
        -eta * eta * a1,
    ];
    let b5 = [eta * a1, -a2, a3, -a2, eta * eta + a1 * a1, -eta * a1];

    let dot = |row: &[f64; 6]| -> f64 { row.iter().zip(h.h.iter()).map(|(r, x)| r * x).sum() };
    let ca = 2.0 * dot(&b1);
    let cb = dot(&b2);
    let cc = dot(&b3);
    let cd = dot(&b4);
    let ce = eta * dot(&b5);

    let den = ca * cd - 2.0 * eta * cb * cb;
    let scale = (ca * cd).abs();
    if den.abs() < 1e-14 * scale.max(1e-300) {
        return Err(LossyQfiError::DegenerateSystem {
            den: den.abs(),
            scale: 1e-14 * scale,
        });
    }
    let mu1 = (cb * ce - cc * cd) / den;
    let mu2 = (ca * ce - 2.0 * eta * cb * cc) / den;
    Ok((mu1, mu2))
}

/// Minimized upper bound on the quadratic-Kerr QFI under transmissivity
/// `eta`: C_Q evaluated at the stationary (mu1, mu2). Returns 0 for an
/// information-free probe (g = 0).
pub fn lossy_qfi(g: f64, alpha_abs: f64, eta: f64) -> Result<f64, LossyQfiError> {
    let h = moment_vector(g, alpha_abs);
    if h.is_information_free() {
        return Ok(0.0);
    }
    let (mu1, mu2) = optimal_mu(&h, eta)?;
    cq_bound(&h, &ChannelLoss { eta, mu1, mu2 })
}

/// Input classes for the lossy linear-phase baseline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LossyBaselineInput {
    /// Coherent state with vacuum on the internal mode.
    CsVs { alpha_abs: f64 },
    /// Coherent ⊗ coherent input.
    CsCs { alpha_abs: f64, beta_abs: f64 },
    /// Coherent ⊗ squeezed-vacuum input.
    CsSvs { alpha_abs: f64, r: f64 },
}

impl LossyBaselineInput {
    /// Mean input photon number (coherent plus seed occupation).
    pub fn n_input(&self) -> f64 {
        match *self {
            LossyBaselineInput::CsVs { alpha_abs } => alpha_abs * alpha_abs,
            LossyBaselineInput::CsCs {
                alpha_abs,
                beta_abs,
            } => alpha_abs * alpha_abs + beta_abs * beta_abs,
            LossyBaselineInput::CsSvs { alpha_abs, r } => {
                alpha_abs * alpha_abs + r.sinh() * r.sinh()
            }
        }
    }

    /// (lossless QFI, mean intra-interferometer photon number) for this
    /// input at gain `g`.
    fn qfi_and_mean(&self, g: f64) -> (f64, f64) {
        match *self {
            LossyBaselineInput::CsVs { alpha_abs } => {
                let (f1, _) = qfi_ideal_parts(g, alpha_abs);
                (f1, abar(1, g, alpha_abs))
            }
            LossyBaselineInput::CsCs {
                alpha_abs,
                beta_abs,
            } => {
                let input = BaselineInput::CsCs {
                    alpha_abs,
                    beta_abs,
                };
                (qfi_baseline_ideal(&input, g), baseline_mean_photon(&input, g))
            }
            LossyBaselineInput::CsSvs { alpha_abs, r } => {
                let input = BaselineInput::CsSvs { alpha_abs, r };
                (qfi_baseline_ideal(&input, g), baseline_mean_photon(&input, g))
            }
        }
    }
}

/// Lossy linear-phase QFI bound for the baseline input classes:
/// F_L1 = 4 eta F nbar / ((1 - eta) F + 4 eta nbar), which reduces to F at
/// eta = 1. Returns 0 for an information-free probe (F = 0 or nbar = 0).
pub fn lossy_qfi_baseline(
    input: &LossyBaselineInput,
    g: f64,
    eta: f64,
) -> Result<f64, LossyQfiError> {
    ChannelLoss::before_phase(eta).validate()?;
    let (f, nbar) = input.qfi_and_mean(g);
    if f <= 0.0 || nbar <= 0.0 {
        return Ok(0.0);
    }
    Ok(4.0 * eta * f * nbar / ((1.0 - eta) * f + 4.0 * eta * nbar))
}
