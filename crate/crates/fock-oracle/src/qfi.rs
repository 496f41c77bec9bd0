//! Quantum Fisher information for mixed states: a finite-dimensional
//! spectral evaluation on small truncations, plus the two channel families
//! (internal-mode loss before or after the phase element) whose information
//! content it measures.
//!
//! For a family rho(phi) with spectral decomposition rho = sum_i p_i |i><i|,
//!
//! ```text
//! F(phi) = 2 sum_{i,j : p_i + p_j > eps} |<i| d_phi rho |j>|^2 / (p_i + p_j)
//! ```
//!
//! with eps = 1e-12 screening the common null space. The derivative is taken
//! by a Richardson-refined central difference (h = 1e-4), which leaves a
//! truncation error far below the screening scale for the smooth families
//! built here.

use analytic_core::InterferometerConfig;
use num_complex::Complex64;

use crate::eigen::hermitian_eigh;
use crate::error::OracleError;
use crate::loss::kraus_branches;
use crate::moments::Mode;
use crate::phase::phase_table;
use crate::pipeline::post_opa_state;
use crate::state::{Cutoff, TwoModeDensityMatrix};

/// Largest per-mode cutoff accepted by [`mixed_qfi_small`]: the spectral
/// method diagonalises the (n_max+1)^2-dimensional joint density matrix at
/// every call, so it is reserved for deliberately small truncations.
/// Comparisons against pure-state values must use the same truncation on
/// both sides, since both are deflated by it equally.
pub const MIXED_QFI_MAX_CUTOFF: usize = 12;

/// Null-space screening threshold of the spectral sum.
const EIGENVALUE_FLOOR: f64 = 1e-12;

/// Where the internal-mode loss acts relative to the phase element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LossOrdering {
    /// Loss channel first, phase element second.
    BeforePhase,
    /// Phase element first, loss channel second.
    AfterPhase,
}

/// Build the family phi -> rho(phi) for the phase element combined with a
/// transmissivity-eta loss channel on the internal mode, in the chosen
/// order. The probe state (input plus first squeezer) is built once at the
/// given cutoff; each closure call assembles the density matrix from pure
/// Kraus branches.
pub fn kerr_loss_family(
    config: &InterferometerConfig,
    eta: f64,
    ordering: LossOrdering,
    cutoff: Cutoff,
) -> Result<impl Fn(f64) -> Result<TwoModeDensityMatrix, OracleError>, OracleError> {
    config.validate()?;
    if !eta.is_finite() || !(eta > 0.0 && eta <= 1.0) {
        return Err(OracleError::InvalidT(eta));
    }
    let probe = post_opa_state(config, cutoff)?;
    let n_max = probe.n_max();
    let cut = probe.cutoff;
    let k = config.k;
    // With loss first, the branch set is phase-independent: build it once.
    let pre_branches = match ordering {
        LossOrdering::BeforePhase => kraus_branches(probe.amplitudes(), n_max, eta, Mode::B)?,
        LossOrdering::AfterPhase => vec![probe.amplitudes().to_vec()],
    };
    Ok(move |phi: f64| -> Result<TwoModeDensityMatrix, OracleError> {
        let dim = n_max + 1;
        let table = phase_table(phi, k, n_max);
        let phased: Vec<Vec<Complex64>> = pre_branches
            .iter()
            .map(|v| {
                let mut w = v.clone();
                for na in 0..dim {
                    for nb in 0..dim {
                        w[na * dim + nb] *= table[nb];
                    }
                }
                w
            })
            .collect();
        let final_branches = match ordering {
            LossOrdering::BeforePhase => phased,
            LossOrdering::AfterPhase => {
                let mut out = Vec::new();
                for v in &phased {
                    out.extend(kraus_branches(v, n_max, eta, Mode::B)?);
                }
                out
            }
        };
        Ok(TwoModeDensityMatrix::from_branches(n_max, cut, &final_branches))
    })
}

fn central_diff<F>(
    rho_of_phi: &F,
    phi: f64,
    h: f64,
    jd: usize,
) -> Result<Vec<Complex64>, OracleError>
where
    F: Fn(f64) -> Result<TwoModeDensityMatrix, OracleError>,
{
    let plus = rho_of_phi(phi + h)?;
    let minus = rho_of_phi(phi - h)?;
    if plus.joint_dim() != jd || minus.joint_dim() != jd {
        return Err(OracleError::InvalidState(
            "family changed its truncation between evaluations".into(),
        ));
    }
    let mut d = vec![Complex64::new(0.0, 0.0); jd * jd];
    for (i, slot) in d.iter_mut().enumerate() {
        *slot = (plus.entries()[i] - minus.entries()[i]) / (2.0 * h);
    }
    Ok(d)
}

/// Quantum Fisher information of a differentiable density-matrix family at
/// `phi` (see module docs). Families deflated by truncation (trace slightly
/// below one at small fixed cutoffs) are admissible; the spectral sum is
/// evaluated on the matrix as given.
pub fn mixed_qfi_small<F>(rho_of_phi: F, phi: f64) -> Result<f64, OracleError>
where
    F: Fn(f64) -> Result<TwoModeDensityMatrix, OracleError>,
{
    let rho0 = rho_of_phi(phi)?;
    let n_max = rho0.n_max();
    if n_max > MIXED_QFI_MAX_CUTOFF {
        return Err(OracleError::CutoffTooLarge {
            n_max,
            max: MIXED_QFI_MAX_CUTOFF,
        });
    }
    let jd = rho0.joint_dim();

    let h = 1e-4;
    let coarse = central_diff(&rho_of_phi, phi, h, jd)?;
    let fine = central_diff(&rho_of_phi, phi, h / 2.0, jd)?;
    let mut drho = vec![Complex64::new(0.0, 0.0); jd * jd];
    for (slot, (c, f)) in drho.iter_mut().zip(coarse.iter().zip(fine.iter())) {
        *slot = (4.0 * f - c) / 3.0;
    }

    let (p, vecs) = hermitian_eigh(rho0.entries(), jd, true)?;
    let v = vecs.expect("eigenvectors were requested");

    // tmp column j = drho · |j>   (eigenvectors are column-major in v).
    let mut tmp = vec![Complex64::new(0.0, 0.0); jd * jd];
    for j in 0..jd {
        let col = &v[j * jd..(j + 1) * jd];
        for r in 0..jd {
            let row = &drho[r * jd..(r + 1) * jd];
            let mut acc = Complex64::new(0.0, 0.0);
            for (rk, ck) in row.iter().zip(col.iter()) {
                acc += rk * ck;
            }
            tmp[j * jd + r] = acc;
        }
    }

    let mut f_total = 0.0;
    for i in 0..jd {
        let vi = &v[i * jd..(i + 1) * jd];
        for j in 0..jd {
            let den = p[i] + p[j];
            if den <= EIGENVALUE_FLOOR {
                continue;
            }
            let tj = &tmp[j * jd..(j + 1) * jd];
            let mut acc = Complex64::new(0.0, 0.0);
            for (vk, tk) in vi.iter().zip(tj.iter()) {
                acc += vk.conj() * tk;
            }
            f_total += 2.0 * acc.norm_sqr() / den;
        }
    }
    Ok(f_total)
}
