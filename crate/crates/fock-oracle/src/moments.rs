//! Expectation values on truncated two-mode states.
//!
//! Quadrature convention: X = (a + a†)/sqrt(2), so a vacuum mode has
//! <X> = 0 and <X^2> = 1/2. Analyses that use the convention
//! X' = a + a† report quadrature means larger by sqrt(2) and variances by 2;
//! ratios such as (signal slope)/(noise std dev) are invariant.

use num_complex::Complex64;

use crate::state::{TwoModeDensityMatrix, TwoModePureState};

/// Which of the two bosonic modes an observable acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    A,
    B,
}

/// Moment queries shared by pure states and density matrices.
pub trait FockState {
    /// (<X>, <X^2>) of the chosen mode, with X = (a + a†)/sqrt(2).
    fn quadrature_moments(&self, mode: Mode) -> (f64, f64);

    /// Photon-number moments <n^j> for j = 1..=max_order (max_order <= 4).
    fn number_moments(&self, mode: Mode, max_order: usize) -> Vec<f64>;
}

impl FockState for TwoModePureState {
    fn quadrature_moments(&self, mode: Mode) -> (f64, f64) {
        let dim = self.n_max() + 1;
        let amp = self.amplitudes();
        // <a> = sum conj(c[n-1 in mode]) sqrt(n) c[n], and
        // <a^2> = sum conj(c[n-2]) sqrt(n (n-1)) c[n].
        let mut mean_a = Complex64::new(0.0, 0.0);
        let mut mean_a2 = Complex64::new(0.0, 0.0);
        let mut mean_n = 0.0;
        for na in 0..dim {
            for nb in 0..dim {
                let c = amp[na * dim + nb];
                if c == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let n_here = match mode {
                    Mode::A => na,
                    Mode::B => nb,
                };
                mean_n += n_here as f64 * c.norm_sqr();
                if n_here >= 1 {
                    let down1 = match mode {
                        Mode::A => amp[(na - 1) * dim + nb],
                        Mode::B => amp[na * dim + nb - 1],
                    };
                    mean_a += down1.conj() * (n_here as f64).sqrt() * c;
                }
                if n_here >= 2 {
                    let down2 = match mode {
                        Mode::A => amp[(na - 2) * dim + nb],
                        Mode::B => amp[na * dim + nb - 2],
                    };
                    mean_a2 +=
                        down2.conj() * ((n_here * (n_here - 1)) as f64).sqrt() * c;
                }
            }
        }
        let x = 2.0_f64.sqrt() * mean_a.re;
        let x2 = (2.0 * mean_a2.re + 2.0 * mean_n + 1.0) / 2.0;
        (x, x2)
    }

    fn number_moments(&self, mode: Mode, max_order: usize) -> Vec<f64> {
        assert!(
            (1..=4).contains(&max_order),
            "number moments supported up to order 4"
        );
        let probs = self.marginal(mode);
        let mut out = vec![0.0; max_order];
        for (n, p) in probs.iter().enumerate() {
            let mut pw = 1.0;
            for slot in out.iter_mut() {
                pw *= n as f64;
                *slot += pw * p;
            }
        }
        out
    }
}

impl FockState for TwoModeDensityMatrix {
    fn quadrature_moments(&self, mode: Mode) -> (f64, f64) {
        let dim = self.dim();
        let jd = self.joint_dim();
        let m = self.entries();
        // Tr(rho a) = sum_n sqrt(n) rho[(.., n-1 in mode), (.., n)], i.e. the
        // matrix element one step below the diagonal in the chosen mode.
        let mut mean_a = Complex64::new(0.0, 0.0);
        let mut mean_a2 = Complex64::new(0.0, 0.0);
        let mut mean_n = 0.0;
        for na in 0..dim {
            for nb in 0..dim {
                let ket = na * dim + nb;
                let n_here = match mode {
                    Mode::A => na,
                    Mode::B => nb,
                };
                mean_n += n_here as f64 * m[ket * jd + ket].re;
                if n_here >= 1 {
                    let bra = match mode {
                        Mode::A => (na - 1) * dim + nb,
                        Mode::B => na * dim + nb - 1,
                    };
                    mean_a += (n_here as f64).sqrt() * m[bra * jd + ket];
                }
                if n_here >= 2 {
                    let bra = match mode {
                        Mode::A => (na - 2) * dim + nb,
                        Mode::B => na * dim + nb - 2,
                    };
                    mean_a2 += ((n_here * (n_here - 1)) as f64).sqrt() * m[bra * jd + ket];
                }
            }
        }
        let x = 2.0_f64.sqrt() * mean_a.re;
        let x2 = (2.0 * mean_a2.re + 2.0 * mean_n + 1.0) / 2.0;
        (x, x2)
    }

    fn number_moments(&self, mode: Mode, max_order: usize) -> Vec<f64> {
        assert!(
            (1..=4).contains(&max_order),
            "number moments supported up to order 4"
        );
        let dim = self.dim();
        let jd = self.joint_dim();
        let m = self.entries();
        let mut out = vec![0.0; max_order];
        for na in 0..dim {
            for nb in 0..dim {
                let ket = na * dim + nb;
                let p = m[ket * jd + ket].re;
                let n_here = match mode {
                    Mode::A => na,
                    Mode::B => nb,
                } as f64;
                let mut pw = 1.0;
                for slot in out.iter_mut() {
                    pw *= n_here;
                    *slot += pw * p;
                }
            }
        }
        out
    }
}
