//! The full interferometer pipeline evaluated in truncated Fock space:
//! coherent-plus-vacuum input, first squeezer, nonlinear phase element,
//! optional photon loss, second squeezer, homodyne detection on the sensing
//! mode — and the numerical phase sensitivity derived from it by error
//! propagation with finite-difference slopes.
//!
//! The second squeezer and the phase element are never applied to the state.
//! Conjugating the sensing-mode annihilation operator through both gives
//!
//! ```text
//! a_out = cosh(g2) a + lam · P†(phi) b† P(phi),
//! lam = -e^{i theta2} sinh(g2),   P(phi) = exp(i phi (b†b)^k),
//! ```
//!
//! an operator acting on the state right after the first squeezer (or on each
//! pure loss branch of it). The three contractions that fix the homodyne mean
//! and second moment — <a_out>, <a_out^2> and |a_out psi|^2 — expand into
//! sums of single-mode pieces, and the phase element only contributes the
//! diagonal kick factors conj(P[nb]) P[nb-1] (and their two-step analogue).
//! Everything multiplying those kicks is independent of phi, so one pass over
//! the state (or over each loss branch, summed — the moments are linear in
//! the density matrix) accumulates a handful of scalars plus four vectors
//! indexed by the internal occupation, after which every phase evaluation is
//! a short dot product. This keeps the evaluation exact (no re-truncation by
//! a second squeezer) and makes phase scans over loss ensembles cheap: the
//! branch ensemble is visited once per cutoff, not once per phase.
//!
//! Detection loss (transmissivity t2 after the interferometer) acts on the
//! sensing mode only and scales normally-ordered moments exactly:
//! <a> -> sqrt(t2) <a>, <a^2> -> t2 <a^2>, <a†a> -> t2 <a†a>.

use analytic_core::{InterferometerConfig, LossConfig};
use num_complex::Complex64;

use crate::error::OracleError;
use crate::loss::for_each_lossy_branch;
use crate::moments::{FockState, Mode};
use crate::opa::apply_opa;
use crate::phase::phase_table;
use crate::state::{make_input, Cutoff, TwoModePureState, HARD_CAP};

/// Smallest accepted finite-difference step.
pub const FD_MIN_STEP: f64 = 1e-6;
/// Largest accepted finite-difference step.
pub const FD_MAX_STEP: f64 = 1e-2;
/// Below this absolute slope the error-propagation quotient is refused.
pub const SLOPE_FLOOR: f64 = 1e-12;

fn check_step(h: f64) -> Result<(), OracleError> {
    if !h.is_finite() || !(FD_MIN_STEP..=FD_MAX_STEP).contains(&h) {
        return Err(OracleError::BadStep(h));
    }
    Ok(())
}

/// Coherent |alpha> in the sensing mode, vacuum in the internal mode, then
/// the first squeezer S(g1 e^{i theta1}). Adaptive cutoffs grow until both
/// the input tail and the squeezed-state boundary occupancy are within
/// tolerance.
pub fn post_opa_state(
    config: &InterferometerConfig,
    cutoff: Cutoff,
) -> Result<TwoModePureState, OracleError> {
    config.validate()?;
    let input = make_input(config.alpha_abs, config.theta_alpha, cutoff)?;
    apply_opa(&input, config.g1, config.theta1)
}

/// Phase-independent contractions of the loss ensemble behind the second
/// squeezer (see module docs). With B† = P† b† P and v one loss branch,
/// every needed expectation is a combination of
///
/// ```text
/// <a>    -> a1,            <a^2>     -> a2,
/// <a†a>  -> da,            <b b†>    -> db   (truncated at the boundary),
/// <B†>   -> kick[nb] c1,   <a B†>    -> kick[nb] c2,
/// <B†^2> -> kick2[nb] c3,  <a† B†>   -> kick[nb] c4,
/// ```
///
/// summed over branches. The kick factors carry all of the phase dependence,
/// so [`SignalReductions::moments`] costs O(n_max) per phase.
struct SignalReductions {
    n_max: usize,
    k: u8,
    ch: f64,
    lam: Complex64,
    a1: Complex64,
    a2: Complex64,
    da: f64,
    db: f64,
    /// c1[nb] = sum_na conj(v[na, nb]) v[na, nb-1]
    c1: Vec<Complex64>,
    /// c2[nb] = sum_na sqrt(na+1) conj(v[na, nb]) v[na+1, nb-1]
    c2: Vec<Complex64>,
    /// c3[nb] = sum_na conj(v[na, nb]) v[na, nb-2]
    c3: Vec<Complex64>,
    /// c4[nb] = sum_na sqrt(na) conj(v[na, nb]) v[na-1, nb-1]
    c4: Vec<Complex64>,
}

impl SignalReductions {
    fn new(
        probe: &TwoModePureState,
        config: &InterferometerConfig,
        t1: f64,
    ) -> Result<Self, OracleError> {
        let n_max = probe.n_max();
        let dim = n_max + 1;
        let mut red = Self {
            n_max,
            k: config.k,
            ch: config.g2.cosh(),
            lam: -Complex64::from_polar(config.g2.sinh(), config.theta2),
            a1: Complex64::new(0.0, 0.0),
            a2: Complex64::new(0.0, 0.0),
            da: 0.0,
            db: 0.0,
            c1: vec![Complex64::new(0.0, 0.0); dim],
            c2: vec![Complex64::new(0.0, 0.0); dim],
            c3: vec![Complex64::new(0.0, 0.0); dim],
            c4: vec![Complex64::new(0.0, 0.0); dim],
        };
        let sq: Vec<f64> = (0..=dim).map(|n| (n as f64).sqrt()).collect();
        for_each_lossy_branch(probe.amplitudes(), n_max, t1, |v| {
            for na in 0..dim {
                for nb in 0..dim {
                    let vv = v[na * dim + nb];
                    if vv == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    let cv = vv.conj();
                    let p = vv.norm_sqr();
                    red.da += na as f64 * p;
                    // <b b†> truncated: occupation n_max has no raising slot
                    // on the grid, matching the explicit-operator evaluation.
                    if nb < n_max {
                        red.db += (nb + 1) as f64 * p;
                    }
                    if na + 1 < dim {
                        red.a1 += sq[na + 1] * cv * v[(na + 1) * dim + nb];
                    }
                    if na + 2 < dim {
                        red.a2 += sq[na + 1] * sq[na + 2] * cv * v[(na + 2) * dim + nb];
                    }
                    if nb >= 1 {
                        red.c1[nb] += cv * v[na * dim + nb - 1];
                        if na + 1 < dim {
                            red.c2[nb] += sq[na + 1] * cv * v[(na + 1) * dim + nb - 1];
                        }
                        if na >= 1 {
                            red.c4[nb] += sq[na] * cv * v[(na - 1) * dim + nb - 1];
                        }
                    }
                    if nb >= 2 {
                        red.c3[nb] += cv * v[na * dim + nb - 2];
                    }
                }
            }
        })?;
        Ok(red)
    }

    /// Homodyne (<X>, <X^2>) of the sensing mode, with X = (a + a†)/sqrt(2),
    /// at the given phase; detection transmissivity t2 scales the
    /// normally-ordered moments.
    fn moments(&self, phi: f64, t2: f64) -> (f64, f64) {
        let table = phase_table(phi, self.k, self.n_max);
        let zero = Complex64::new(0.0, 0.0);
        let (mut s1, mut s2, mut s3, mut s4) = (zero, zero, zero, zero);
        for nb in 1..=self.n_max {
            let kick = table[nb].conj() * table[nb - 1];
            let r = (nb as f64).sqrt();
            s1 += kick * r * self.c1[nb];
            s2 += kick * r * self.c2[nb];
            s4 += kick * r * self.c4[nb];
            if nb >= 2 {
                let kick2 = table[nb].conj() * table[nb - 2];
                s3 += kick2 * (nb as f64 * (nb - 1) as f64).sqrt() * self.c3[nb];
            }
        }
        let ch = self.ch;
        let lam = self.lam;
        let m1 = (ch * self.a1 + lam * s1).re;
        let m2 = (ch * ch * self.a2 + 2.0 * ch * lam * s2 + lam * lam * s3).re;
        let mn = ch * ch * self.da + lam.norm_sqr() * self.db + 2.0 * ch * (lam * s4).re;
        let x = (2.0 * t2).sqrt() * m1;
        let x2 = (2.0 * t2 * m2 + 2.0 * t2 * mn + 1.0) / 2.0;
        (x, x2)
    }
}

/// Error-propagation sensitivity: sqrt(Var X) / |d<X>/dphi|. Refuses slopes
/// below [`SLOPE_FLOOR`], where the quotient is meaningless; the variance is
/// clamped at zero against roundoff.
pub fn error_propagation(mean_x: f64, mean_x2: f64, slope: f64) -> Result<f64, OracleError> {
    if !(slope.abs() >= SLOPE_FLOOR) {
        return Err(OracleError::ZeroDerivative(slope));
    }
    let var = (mean_x2 - mean_x * mean_x).max(0.0);
    Ok(var.sqrt() / slope.abs())
}

fn sensitivity_at(red: &SignalReductions, t2: f64, phi: f64, h: f64) -> Result<f64, OracleError> {
    let x_at = |p: f64| red.moments(p, t2).0;
    // Central difference with one Richardson refinement: the h^2 error terms
    // of the h and h/2 stencils cancel, leaving O(h^4).
    let coarse = (x_at(phi + h) - x_at(phi - h)) / (2.0 * h);
    let fine = (x_at(phi + h / 2.0) - x_at(phi - h / 2.0)) / h;
    let slope = (4.0 * fine - coarse) / 3.0;
    let (x, x2) = red.moments(phi, t2);
    error_propagation(x, x2, slope)
}

/// Run `eval` at the given cutoff; when the policy asks for confirmation,
/// rerun at double the (tail-grown) truncation and require the results to
/// agree within `moment_tol` relative to the overall result scale. The
/// refined values are returned. At the hard cap the tail-checked result is
/// accepted as-is.
fn confirmed_vec<F>(cutoff: Cutoff, eval: F) -> Result<Vec<f64>, OracleError>
where
    F: Fn(Cutoff) -> Result<(Vec<f64>, usize), OracleError>,
{
    cutoff.validate()?;
    let (v1, n1) = eval(cutoff)?;
    if !cutoff.confirms() || n1 >= HARD_CAP {
        return Ok(v1);
    }
    let n2 = (2 * n1).min(HARD_CAP);
    let (v2, _) = eval(Cutoff::fixed(n2))?;
    let scale = v2.iter().fold(1e-12_f64, |m, x| m.max(x.abs()));
    let mut dev: f64 = 0.0;
    for (a, b) in v1.iter().zip(v2.iter()) {
        dev = dev.max((a - b).abs());
    }
    dev /= scale;
    if dev <= cutoff.moment_tol {
        Ok(v2)
    } else {
        Err(OracleError::NotConverged {
            dev,
            tol: cutoff.moment_tol,
        })
    }
}

/// (<X>, Var X) of the homodyne signal at each phase in `phis`, under the
/// default adaptive cutoff policy.
pub fn signal_curve(
    config: &InterferometerConfig,
    phis: &[f64],
    loss: &LossConfig,
) -> Result<Vec<(f64, f64)>, OracleError> {
    signal_curve_with(config, phis, loss, Cutoff::auto())
}

/// [`signal_curve`] with an explicit cutoff policy.
pub fn signal_curve_with(
    config: &InterferometerConfig,
    phis: &[f64],
    loss: &LossConfig,
    cutoff: Cutoff,
) -> Result<Vec<(f64, f64)>, OracleError> {
    config.validate()?;
    loss.validate()?;
    let flat = confirmed_vec(cutoff, |c| {
        let probe = post_opa_state(config, c)?;
        let red = SignalReductions::new(&probe, config, loss.t1)?;
        let mut out = Vec::with_capacity(2 * phis.len());
        for &p in phis {
            let (x, x2) = red.moments(p, loss.t2);
            out.push(x);
            out.push((x2 - x * x).max(0.0));
        }
        Ok((out, probe.n_max()))
    })?;
    Ok(flat.chunks(2).map(|c| (c[0], c[1])).collect())
}

/// Numerical phase sensitivity at each phase in `phis`, sharing one state
/// build per cutoff across the whole scan.
pub fn sensitivity_profile(
    config: &InterferometerConfig,
    phis: &[f64],
    loss: &LossConfig,
    h: f64,
    cutoff: Cutoff,
) -> Result<Vec<f64>, OracleError> {
    config.validate()?;
    loss.validate()?;
    check_step(h)?;
    confirmed_vec(cutoff, |c| {
        let probe = post_opa_state(config, c)?;
        let red = SignalReductions::new(&probe, config, loss.t1)?;
        let mut out = Vec::with_capacity(phis.len());
        for &p in phis {
            out.push(sensitivity_at(&red, loss.t2, p, h)?);
        }
        Ok((out, probe.n_max()))
    })
}

/// Numerical phase sensitivity at the configured working point `config.phi`,
/// under the default adaptive cutoff policy.
pub fn sensitivity_numeric(
    config: &InterferometerConfig,
    loss: &LossConfig,
    h: f64,
) -> Result<f64, OracleError> {
    sensitivity_numeric_with(config, loss, h, Cutoff::auto())
}

/// [`sensitivity_numeric`] with an explicit cutoff policy.
pub fn sensitivity_numeric_with(
    config: &InterferometerConfig,
    loss: &LossConfig,
    h: f64,
    cutoff: Cutoff,
) -> Result<f64, OracleError> {
    Ok(sensitivity_profile(config, &[config.phi], loss, h, cutoff)?[0])
}

/// Quantum Fisher information of the lossless phase estimation: for the pure
/// probe behind the phase element, F = 4 Var((b†b)^k), evaluated from the
/// internal-mode number moments.
pub fn pure_qfi_numeric(config: &InterferometerConfig) -> Result<f64, OracleError> {
    pure_qfi_numeric_with(config, Cutoff::auto())
}

/// [`pure_qfi_numeric`] with an explicit cutoff policy.
pub fn pure_qfi_numeric_with(
    config: &InterferometerConfig,
    cutoff: Cutoff,
) -> Result<f64, OracleError> {
    config.validate()?;
    let vals = confirmed_vec(cutoff, |c| {
        let probe = post_opa_state(config, c)?;
        let f = match config.k {
            1 => {
                let m = probe.number_moments(Mode::B, 2);
                4.0 * (m[1] - m[0] * m[0])
            }
            _ => {
                let m = probe.number_moments(Mode::B, 4);
                4.0 * (m[3] - m[1] * m[1])
            }
        };
        Ok((vec![f], probe.n_max()))
    })?;
    Ok(vals[0])
}
