//! Fault-insertion test points for the oracle layer (see the analogous
//! module in the closed-form crate). Default to the identity; only the
//! verification harness's fault-injection smoke test should ever arm them.

use std::sync::RwLock;

static PHASE_SCALE: RwLock<f64> = RwLock::new(1.0);

/// Scale the phase argument of the nonlinear phase element by `scale`.
/// Testing hook; pass 1.0 to restore.
pub fn set_phase_scale(scale: f64) {
    *PHASE_SCALE.write().unwrap() = scale;
}

/// Restore every oracle fault point to the identity.
pub fn clear() {
    *PHASE_SCALE.write().unwrap() = 1.0;
}

pub(crate) fn phase_scale() -> f64 {
    *PHASE_SCALE.read().unwrap()
}
