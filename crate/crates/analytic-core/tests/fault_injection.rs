//! Fault-insertion hooks are process-global, so this file holds exactly one
//! test: it must not share a process with tests that read the same closed
//! forms concurrently.

use analytic_core::{
    abar, fault_points, qfi_ideal_parts, sensitivity_lossy_optimal, sensitivity_optimal,
    InterferometerConfig, LossConfig,
};
use std::f64::consts::FRAC_PI_2;

#[test]
fn fault_hooks_scale_only_their_target() {
    let config = InterferometerConfig::balanced(1.0, 1.0, FRAC_PI_2, 1, 0.0);
    let loss = LossConfig::new(0.6, 0.6);
    let ideal = LossConfig::default();

    let a3 = abar(3, 1.0, 1.0);
    let (f1, f2) = qfi_ideal_parts(1.0, 1.0);
    let lossy = sensitivity_lossy_optimal(&config, &loss).unwrap();
    let lossless = sensitivity_lossy_optimal(&config, &ideal).unwrap();

    // Corrupt the third-order moment coefficient: the fourth-moment
    // information must move by the same relative order while the
    // second-moment information stays bitwise intact.
    fault_points::set_abar_scale(3, 1.0 + 1e-3);
    let a3_bad = abar(3, 1.0, 1.0);
    let (f1_bad, f2_bad) = qfi_ideal_parts(1.0, 1.0);
    assert!(((a3_bad / a3) - (1.0 + 1e-3)).abs() < 1e-12);
    assert_eq!(f1_bad, f1, "the linear-phase information never sees A3");
    let shift = (f2_bad - f2).abs() / f2;
    assert!(
        shift > 1e-5 && shift < 1e-2,
        "expected a ~1e-3-order shift in the quadratic information, got {shift}"
    );
    fault_points::clear();
    assert_eq!(abar(3, 1.0, 1.0), a3);
    assert_eq!(qfi_ideal_parts(1.0, 1.0), (f1, f2));

    // Corrupt the loss bracket: the lossy value moves, while the ideal-loss
    // limit is exactly inert (the bracket it scales is exactly zero there).
    fault_points::set_lossy_bracket_scale(1.0 + 1e-3);
    let lossy_bad = sensitivity_lossy_optimal(&config, &loss).unwrap();
    let lossless_bad = sensitivity_lossy_optimal(&config, &ideal).unwrap();
    assert!((lossy_bad - lossy).abs() / lossy > 1e-5);
    assert_eq!(lossless_bad, lossless);
    assert_eq!(
        lossless_bad,
        sensitivity_optimal(&config).unwrap(),
        "the lossless limit stays bit-exact even under a bracket fault"
    );
    fault_points::clear();
    assert_eq!(sensitivity_lossy_optimal(&config, &loss).unwrap(), lossy);
}
