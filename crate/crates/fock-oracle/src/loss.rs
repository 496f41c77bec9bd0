//! Photon loss (a bosonic attenuation channel with transmissivity T) in the
//! truncated Fock representation.
//!
//! The channel is rho -> sum_l K_l rho K_l† with Kraus operators
//!
//! ```text
//! K_l = sqrt((1-T)^l / l!) · T^{n/2} · a^l
//! <n-l| K_l |n> = sqrt( C(n, l) (1-T)^l T^{n-l} )
//! ```
//!
//! Applied to a pure two-mode state, each Kraus index produces an
//! (unnormalised) pure branch, so a state that passes through loss on both
//! modes becomes an ensemble of branches whose weights sum to one. Working
//! with branches instead of the dense density matrix keeps later moment
//! evaluations at O(branches · dim^2) instead of O(dim^4).

use num_complex::Complex64;

use crate::error::OracleError;
use crate::moments::Mode;
use crate::state::{TwoModeDensityMatrix, TwoModePureState};

/// Branches with squared norm at or below this weight are dropped; the total
/// discarded weight stays far below every tolerance used downstream.
pub const BRANCH_KEEP_TOL: f64 = 1e-16;

fn check_t(t: f64) -> Result<(), OracleError> {
    if !t.is_finite() || !(0.0..=1.0).contains(&t) {
        return Err(OracleError::InvalidT(t));
    }
    Ok(())
}

/// Kraus coefficient table: `kernel[l][n_out]` = <n_out| K_l |n_out + l>,
/// i.e. the amplitude factor multiplying an input occupation of n_out + l.
/// Evaluated in log space so large cutoffs do not overflow the factorials.
pub fn loss_kernel(n_max: usize, t: f64) -> Result<Vec<Vec<f64>>, OracleError> {
    check_t(t)?;
    let dim = n_max + 1;
    // ln_fact[n] = ln n!
    let mut ln_fact = vec![0.0; dim + 1];
    for n in 1..=dim {
        ln_fact[n] = ln_fact[n - 1] + (n as f64).ln();
    }
    let ln_t = if t > 0.0 { t.ln() } else { f64::NEG_INFINITY };
    let ln_omt = if t < 1.0 { (1.0 - t).ln() } else { f64::NEG_INFINITY };

    let mut kernel = Vec::with_capacity(dim);
    for l in 0..dim {
        let mut row = vec![0.0; dim];
        for (n_out, slot) in row.iter_mut().enumerate() {
            let n_in = n_out + l;
            if n_in > n_max {
                break;
            }
            let log_amp2 = if l == 0 {
                (n_in as f64) * ln_t
            } else if t >= 1.0 {
                f64::NEG_INFINITY
            } else {
                (l as f64) * ln_omt + ln_fact[n_in] - ln_fact[l] - ln_fact[n_out]
                    + (n_out as f64) * ln_t
            };
            // T = 0 with n_out > 0 gives ln T = -inf -> amplitude 0.
            let half = 0.5 * log_amp2;
            *slot = if half == f64::NEG_INFINITY {
                0.0
            } else {
                half.exp()
            };
        }
        kernel.push(row);
    }
    // Lossless channel: identity (only K_0 with unit amplitudes).
    if t >= 1.0 {
        for (l, row) in kernel.iter_mut().enumerate() {
            for (n_out, slot) in row.iter_mut().enumerate() {
                *slot = if l == 0 && n_out <= n_max { 1.0 } else { 0.0 };
            }
        }
    }
    Ok(kernel)
}

/// Apply the loss channel with transmissivity `t` to one mode of a dense
/// two-mode density matrix.
pub fn apply_loss(
    rho: &TwoModeDensityMatrix,
    t: f64,
    mode: Mode,
) -> Result<TwoModeDensityMatrix, OracleError> {
    check_t(t)?;
    if t >= 1.0 {
        return Ok(rho.clone());
    }
    let n = rho.n_max();
    let dim = n + 1;
    let kernel = loss_kernel(n, t)?;
    let mut out = TwoModeDensityMatrix::zeros(n, rho.cutoff);
    let acc = out.entries_mut();
    for l in 0..dim {
        for na_o in 0..dim {
            for nb_o in 0..dim {
                for ma_o in 0..dim {
                    for mb_o in 0..dim {
                        let (ket_in, bra_in, c_ket, c_bra) = match mode {
                            Mode::A => {
                                if na_o + l > n || ma_o + l > n {
                                    continue;
                                }
                                (
                                    (na_o + l, nb_o),
                                    (ma_o + l, mb_o),
                                    kernel[l][na_o],
                                    kernel[l][ma_o],
                                )
                            }
                            Mode::B => {
                                if nb_o + l > n || mb_o + l > n {
                                    continue;
                                }
                                (
                                    (na_o, nb_o + l),
                                    (ma_o, mb_o + l),
                                    kernel[l][nb_o],
                                    kernel[l][mb_o],
                                )
                            }
                        };
                        let w = c_ket * c_bra;
                        if w == 0.0 {
                            continue;
                        }
                        let src = rho.element(ket_in, bra_in);
                        if src != Complex64::new(0.0, 0.0) {
                            let p = na_o * dim + nb_o;
                            let q = ma_o * dim + mb_o;
                            acc[p * dim * dim + q] += w * src;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The single (unnormalised) Kraus branch for loss index `l` on one mode:
/// returns the branch amplitudes and their squared norm.
fn branch_of(
    row: &[f64],
    l: usize,
    amp: &[Complex64],
    n_max: usize,
    mode: Mode,
) -> (Vec<Complex64>, f64) {
    let dim = n_max + 1;
    let mut v = vec![Complex64::new(0.0, 0.0); dim * dim];
    let mut norm2 = 0.0;
    for na in 0..dim {
        for nb in 0..dim {
            let a = match mode {
                Mode::A => {
                    if na + l > n_max {
                        continue;
                    }
                    row[na] * amp[(na + l) * dim + nb]
                }
                Mode::B => {
                    if nb + l > n_max {
                        continue;
                    }
                    row[nb] * amp[na * dim + nb + l]
                }
            };
            v[na * dim + nb] = a;
            norm2 += a.norm_sqr();
        }
    }
    (v, norm2)
}

/// Decompose the action of the loss channel on a pure state into pure
/// (unnormalised) Kraus branches. Branch squared norms sum to one up to the
/// pruning tolerance.
pub fn kraus_branches(
    amp: &[Complex64],
    n_max: usize,
    t: f64,
    mode: Mode,
) -> Result<Vec<Vec<Complex64>>, OracleError> {
    check_t(t)?;
    let dim = n_max + 1;
    assert_eq!(amp.len(), dim * dim, "amplitude grid size mismatch");
    if t >= 1.0 {
        return Ok(vec![amp.to_vec()]);
    }
    let kernel = loss_kernel(n_max, t)?;
    let mut branches = Vec::new();
    for (l, row) in kernel.iter().enumerate() {
        let (v, norm2) = branch_of(row, l, amp, n_max, mode);
        if norm2 > BRANCH_KEEP_TOL {
            branches.push(v);
        }
    }
    Ok(branches)
}

/// Visit every retained pure Kraus branch of equal-transmissivity loss
/// applied to both modes, one at a time, without materialising the whole
/// ensemble. A two-mode branch is skipped as soon as its mode-a parent falls
/// below the keep tolerance (children norms can only be smaller in total).
pub fn for_each_lossy_branch<F: FnMut(&[Complex64])>(
    amp: &[Complex64],
    n_max: usize,
    t: f64,
    mut visit: F,
) -> Result<(), OracleError> {
    check_t(t)?;
    let dim = n_max + 1;
    assert_eq!(amp.len(), dim * dim, "amplitude grid size mismatch");
    if t >= 1.0 {
        visit(amp);
        return Ok(());
    }
    let kernel = loss_kernel(n_max, t)?;
    for (la, row_a) in kernel.iter().enumerate() {
        let (va, norm_a) = branch_of(row_a, la, amp, n_max, Mode::A);
        if norm_a <= BRANCH_KEEP_TOL {
            continue;
        }
        for (lb, row_b) in kernel.iter().enumerate() {
            let (vab, norm_ab) = branch_of(row_b, lb, &va, n_max, Mode::B);
            if norm_ab > BRANCH_KEEP_TOL {
                visit(&vab);
            }
        }
    }
    Ok(())
}

/// Apply equal-transmissivity loss to both modes of a pure state, returning
/// the resulting pure-branch ensemble.
pub fn lossy_branch_set(
    psi: &TwoModePureState,
    t: f64,
) -> Result<Vec<Vec<Complex64>>, OracleError> {
    let mut out = Vec::new();
    for_each_lossy_branch(psi.amplitudes(), psi.n_max(), t, |v| out.push(v.to_vec()))?;
    Ok(out)
}
