//! Brute-force truncated-Fock-space reference implementation of a nonlinear
//! SU(1,1)-type interferometer: a coherent-plus-vacuum input passes through a
//! two-mode squeezer, a nonlinear phase element exp(i phi (b†b)^k) with
//! k = 1 or 2 on the internal mode, optional photon loss, and a second
//! squeezer, followed by homodyne detection of the sensing mode.
//!
//! Everything is computed from first principles on an explicit number-state
//! grid — squeezers as exact subspace rotations, loss as Kraus branches,
//! sensitivities by finite-difference error propagation, Fisher information
//! spectrally — with adaptive truncation control and a doubling-based
//! convergence confirmation on every reported quantity. The crate exists to
//! cross-check closed-form results independently, so it shares no formulas
//! with the analytic layer beyond the interferometer definition itself.
//!
//! Conventions: quadrature X = (a + a†)/sqrt(2) (vacuum variance 1/2);
//! squeezer S(xi) = exp(xi* ab - xi a†b†) with xi = g e^{i theta}; the
//! nonlinear phase acts on the internal mode b.

mod eigen;
mod error;
pub mod fault_points;
mod loss;
mod moments;
mod opa;
mod phase;
mod pipeline;
mod qfi;
mod state;

pub use error::OracleError;
pub use loss::{
    apply_loss, for_each_lossy_branch, kraus_branches, loss_kernel, lossy_branch_set,
    BRANCH_KEEP_TOL,
};
pub use moments::{FockState, Mode};
pub use opa::{apply_opa, apply_opa_series};
pub use phase::{apply_phase, check_kerr_conjugation};
pub use pipeline::{
    error_propagation, post_opa_state, pure_qfi_numeric, pure_qfi_numeric_with,
    sensitivity_numeric, sensitivity_numeric_with, sensitivity_profile, signal_curve,
    signal_curve_with, FD_MAX_STEP, FD_MIN_STEP, SLOPE_FLOOR,
};
pub use qfi::{kerr_loss_family, mixed_qfi_small, LossOrdering, MIXED_QFI_MAX_CUTOFF};
pub use state::{
    make_input, Cutoff, TwoModeDensityMatrix, TwoModePureState, HARD_CAP,
};
