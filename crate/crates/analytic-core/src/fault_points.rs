//! Fault-insertion test points.
//!
//! The verification harness needs to demonstrate that a corrupted closed-form
//! coefficient is actually caught by the invariant suite (a fault-insertion
//! smoke test, standard practice for safety-relevant numerics). These hooks
//! let a test process scale selected internal coefficients by a small factor.
//! They default to the identity, are process-global, and must never be armed
//! in production use.

use std::sync::RwLock;

static ABAR_SCALE: RwLock<[f64; 4]> = RwLock::new([1.0; 4]);
static LOSSY_BRACKET_SCALE: RwLock<f64> = RwLock::new(1.0);

/// Scale the normally-ordered moment coefficient of order `m` (1..=4) by
/// `scale`. Testing hook; pass 1.0 to restore.
pub fn set_abar_scale(m: usize, scale: f64) {
    assert!((1..=4).contains(&m), "abar order must be 1..=4");
    ABAR_SCALE.write().unwrap()[m - 1] = scale;
}

/// Scale the loss bracket of the lossy optimal-point sensitivity by `scale`.
/// Testing hook; pass 1.0 to restore.
pub fn set_lossy_bracket_scale(scale: f64) {
    *LOSSY_BRACKET_SCALE.write().unwrap() = scale;
}

/// Restore every fault point to the identity.
pub fn clear() {
    *ABAR_SCALE.write().unwrap() = [1.0; 4];
    *LOSSY_BRACKET_SCALE.write().unwrap() = 1.0;
}

pub(crate) fn abar_scale(m: usize) -> f64 {
    ABAR_SCALE.read().unwrap()[m - 1]
}

pub(crate) fn lossy_bracket_scale() -> f64 {
    *LOSSY_BRACKET_SCALE.read().unwrap()
}
