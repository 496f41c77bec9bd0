//! Truncated two-mode Fock-space states: pure amplitude grids and dense
//! density matrices, plus the adaptive-cutoff policy shared by the oracle
//! operations.

use num_complex::Complex64;

use crate::error::OracleError;

/// Hard upper bound on the per-mode truncation index.
pub const HARD_CAP: usize = 256;

/// Truncation policy. `n_max` is the starting (or fixed) per-mode cutoff;
/// operations that support adaptive growth double it while the boundary
/// occupancy exceeds `tail_tol`, up to [`HARD_CAP`]. Result-level operations
/// additionally confirm convergence by doubling once more and requiring the
/// reported value to move by less than `moment_tol` relative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cutoff {
    pub n_max: usize,
    pub tail_tol: f64,
    pub moment_tol: f64,
}

impl Cutoff {
    /// Default adaptive policy: start at 16, tail tolerance 1e-12, moment
    /// tolerance 1e-9.
    pub fn auto() -> Self {
        Self {
            n_max: 16,
            tail_tol: 1e-12,
            moment_tol: 1e-9,
        }
    }

    /// Adaptive policy with a custom starting cutoff.
    pub fn adaptive_from(n_max: usize) -> Self {
        Self {
            n_max,
            ..Self::auto()
        }
    }

    /// Expert mode: use exactly this cutoff, with growth and the convergence
    /// confirmation disabled. The caller takes responsibility for adequacy.
    pub fn fixed(n_max: usize) -> Self {
        Self {
            n_max,
            tail_tol: f64::INFINITY,
            moment_tol: f64::INFINITY,
        }
    }

    /// Whether tail-driven growth is enabled.
    pub fn is_adaptive(&self) -> bool {
        self.tail_tol.is_finite()
    }

    /// Whether the doubling confirmation of reported results is enabled.
    pub fn confirms(&self) -> bool {
        self.moment_tol.is_finite()
    }

    pub fn validate(&self) -> Result<(), OracleError> {
        if self.n_max == 0 || self.n_max > HARD_CAP {
            return Err(OracleError::CutoffTooLarge {
                n_max: self.n_max,
                max: HARD_CAP,
            });
        }
        Ok(())
    }
}

impl Default for Cutoff {
    fn default() -> Self {
        Self::auto()
    }
}

/// Pure two-mode state on the truncated grid {0..n_max} x {0..n_max},
/// stored row-major with the mode-a index outer:
/// amplitude(n_a, n_b) = amp[n_a * (n_max+1) + n_b].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModePureState {
    n_max: usize,
    pub cutoff: Cutoff,
    amp: Vec<Complex64>,
}

impl TwoModePureState {
    /// The vacuum |0, 0>.
    pub fn vacuum(cutoff: Cutoff) -> Result<Self, OracleError> {
        cutoff.validate()?;
        let dim = cutoff.n_max + 1;
        let mut amp = vec![Complex64::new(0.0, 0.0); dim * dim];
        amp[0] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_max: cutoff.n_max,
            cutoff,
            amp,
        })
    }

    /// Build a state from a raw amplitude grid (row-major, mode a outer).
    pub fn from_amplitudes(
        n_max: usize,
        cutoff: Cutoff,
        amp: Vec<Complex64>,
    ) -> Result<Self, OracleError> {
        let dim = n_max + 1;
        if amp.len() != dim * dim {
            return Err(OracleError::InvalidState(format!(
                "amplitude grid has {} entries, expected {}",
                amp.len(),
                dim * dim
            )));
        }
        Ok(Self { n_max, cutoff, amp })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        self.n_max + 1
    }

    #[inline]
    pub fn idx(&self, na: usize, nb: usize) -> usize {
        na * (self.n_max + 1) + nb
    }

    pub fn amplitude(&self, na: usize, nb: usize) -> Complex64 {
        self.amp[self.idx(na, nb)]
    }

    pub fn set_amplitude(&mut self, na: usize, nb: usize, v: Complex64) {
        let i = self.idx(na, nb);
        self.amp[i] = v;
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amp
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amp
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amp.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn normalize(&mut self) {
        let n = self.norm_sqr().sqrt();
        if n > 0.0 {
            for c in &mut self.amp {
                *c /= n;
            }
        }
    }

    /// Norm must be within 1e-10 of 1.
    pub fn validate(&self) -> Result<(), OracleError> {
        let n = self.norm_sqr();
        if (n - 1.0).abs() > 1e-10 {
            return Err(OracleError::InvalidState(format!(
                "norm^2 = {n} deviates from 1 by more than 1e-10"
            )));
        }
        Ok(())
    }

    /// Probability mass sitting on the truncation boundary (top row plus top
    /// column of the grid) — the signal that the cutoff is too small.
    pub fn boundary_occupancy(&self) -> f64 {
        let dim = self.dim();
        let mut tail = 0.0;
        for nb in 0..dim {
            tail += self.amp[self.idx(self.n_max, nb)].norm_sqr();
        }
        for na in 0..self.n_max {
            tail += self.amp[self.idx(na, self.n_max)].norm_sqr();
        }
        tail
    }

    /// Re-embed into a larger grid (zero padding).
    pub fn grow(&self, new_n_max: usize) -> Self {
        assert!(new_n_max >= self.n_max);
        let new_dim = new_n_max + 1;
        let mut amp = vec![Complex64::new(0.0, 0.0); new_dim * new_dim];
        for na in 0..=self.n_max {
            for nb in 0..=self.n_max {
                amp[na * new_dim + nb] = self.amplitude(na, nb);
            }
        }
        Self {
            n_max: new_n_max,
            cutoff: Cutoff {
                n_max: new_n_max,
                ..self.cutoff
            },
            amp,
        }
    }

    /// Marginal photon-number distribution of one mode.
    pub fn marginal(&self, mode: crate::moments::Mode) -> Vec<f64> {
        let dim = self.dim();
        let mut p = vec![0.0; dim];
        for na in 0..dim {
            for nb in 0..dim {
                let w = self.amp[na * dim + nb].norm_sqr();
                match mode {
                    crate::moments::Mode::A => p[na] += w,
                    crate::moments::Mode::B => p[nb] += w,
                }
            }
        }
        p
    }

    /// Overlap <self|other> (states must share a truncation).
    pub fn overlap(&self, other: &Self) -> Complex64 {
        assert_eq!(self.n_max, other.n_max, "truncations differ");
        self.amp
            .iter()
            .zip(other.amp.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// Coherent input |alpha>_a ⊗ |0>_b with alpha = alpha_abs e^{i theta_alpha}.
/// Grows the cutoff until the Poisson tail probability is within `tail_tol`.
pub fn make_input(
    alpha_abs: f64,
    theta_alpha: f64,
    cutoff: Cutoff,
) -> Result<TwoModePureState, OracleError> {
    cutoff.validate()?;
    if !(alpha_abs >= 0.0) || !alpha_abs.is_finite() || !theta_alpha.is_finite() {
        return Err(OracleError::InvalidState(format!(
            "coherent amplitude must be finite and nonnegative, got |alpha|={alpha_abs}, theta_alpha={theta_alpha}"
        )));
    }
    let mut n = cutoff.n_max;
    loop {
        // c_n = e^{-|a|^2/2} a^n / sqrt(n!) via the stable ratio recurrence.
        let mut mags = Vec::with_capacity(n + 1);
        let mut m = (-alpha_abs * alpha_abs / 2.0).exp();
        mags.push(m);
        for j in 1..=n {
            m *= alpha_abs / (j as f64).sqrt();
            mags.push(m);
        }
        let tail = 1.0 - mags.iter().map(|x| x * x).sum::<f64>();
        if tail <= cutoff.tail_tol || !cutoff.is_adaptive() {
            let dim = n + 1;
            let mut amp = vec![Complex64::new(0.0, 0.0); dim * dim];
            for (j, &mag) in mags.iter().enumerate() {
                amp[j * dim] = Complex64::from_polar(mag, theta_alpha * j as f64);
            }
            return Ok(TwoModePureState {
                n_max: n,
                cutoff: Cutoff { n_max: n, ..cutoff },
                amp,
            });
        }
        if n >= HARD_CAP {
            return Err(OracleError::CutoffTooSmall {
                n_max: HARD_CAP,
                tail,
                tol: cutoff.tail_tol,
            });
        }
        n = (2 * n).min(HARD_CAP);
    }
}

/// Dense two-mode density matrix on the truncated grid; row-major over the
/// joint index p = n_a * (n_max+1) + n_b:
/// element((n_a,n_b),(m_a,m_b)) = m[p * dim^2 + q].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeDensityMatrix {
    n_max: usize,
    pub cutoff: Cutoff,
    m: Vec<Complex64>,
}

impl TwoModeDensityMatrix {
    pub fn from_pure(psi: &TwoModePureState) -> Self {
        let amp = psi.amplitudes();
        let jd = amp.len();
        let mut m = vec![Complex64::new(0.0, 0.0); jd * jd];
        for p in 0..jd {
            for q in 0..jd {
                m[p * jd + q] = amp[p] * amp[q].conj();
            }
        }
        Self {
            n_max: psi.n_max(),
            cutoff: psi.cutoff,
            m,
        }
    }

    /// Sum of |v><v| over unnormalized branch vectors (each of joint length
    /// (n_max+1)^2).
    pub fn from_branches(n_max: usize, cutoff: Cutoff, branches: &[Vec<Complex64>]) -> Self {
        let jd = (n_max + 1) * (n_max + 1);
        let mut m = vec![Complex64::new(0.0, 0.0); jd * jd];
        for v in branches {
            assert_eq!(v.len(), jd, "branch vector has wrong length");
            for p in 0..jd {
                if v[p] == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for q in 0..jd {
                    m[p * jd + q] += v[p] * v[q].conj();
                }
            }
        }
        Self { n_max, cutoff, m }
    }

    /// All-zero matrix, used as an accumulation target by channel maps.
    pub(crate) fn zeros(n_max: usize, cutoff: Cutoff) -> Self {
        let jd = (n_max + 1) * (n_max + 1);
        Self {
            n_max,
            cutoff,
            m: vec![Complex64::new(0.0, 0.0); jd * jd],
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        self.n_max + 1
    }

    /// Dimension of the joint Hilbert space (dim^2).
    pub fn joint_dim(&self) -> usize {
        (self.n_max + 1) * (self.n_max + 1)
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.m
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Complex64] {
        &mut self.m
    }

    pub fn element(&self, bra: (usize, usize), ket: (usize, usize)) -> Complex64 {
        let dim = self.dim();
        let p = bra.0 * dim + bra.1;
        let q = ket.0 * dim + ket.1;
        self.m[p * self.joint_dim() + q]
    }

    pub fn trace(&self) -> f64 {
        let jd = self.joint_dim();
        (0..jd).map(|p| self.m[p * jd + p].re).sum()
    }

    /// Hermiticity within 1e-12, unit trace within 1e-10, and (for joint
    /// dimensions small enough to afford an eigensolve) eigenvalues above
    /// -1e-10. For larger matrices the positivity check falls back to the
    /// diagonal (a necessary condition).
    pub fn validate(&self) -> Result<(), OracleError> {
        let jd = self.joint_dim();
        let mut herm_dev: f64 = 0.0;
        for p in 0..jd {
            for q in p..jd {
                herm_dev = herm_dev.max((self.m[p * jd + q] - self.m[q * jd + p].conj()).norm());
            }
        }
        if herm_dev > 1e-12 {
            return Err(OracleError::InvalidState(format!(
                "hermiticity deviation {herm_dev:.3e} exceeds 1e-12"
            )));
        }
        let tr = self.trace();
        if (tr - 1.0).abs() > 1e-10 {
            return Err(OracleError::InvalidState(format!(
                "trace = {tr} deviates from 1 by more than 1e-10"
            )));
        }
        if jd <= 1024 {
            let (evals, _) = crate::eigen::hermitian_eigh(&self.m, jd, false)?;
            if let Some(&min) = evals.first() {
                if min < -1e-10 {
                    return Err(OracleError::InvalidState(format!(
                        "minimum eigenvalue {min:.3e} below -1e-10"
                    )));
                }
            }
        } else {
            for p in 0..jd {
                if self.m[p * jd + p].re < -1e-10 {
                    return Err(OracleError::InvalidState(format!(
                        "negative diagonal element {:.3e}",
                        self.m[p * jd + p].re
                    )));
                }
            }
        }
        Ok(())
    }
}
