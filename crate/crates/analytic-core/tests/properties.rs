//! Property-based checks of the closed forms over randomized parameter
//! domains.

use analytic_core::{
    laguerre, limits, qfi_ideal_parts, sensitivity_analytic, sensitivity_lossy_optimal,
    sensitivity_optimal, InterferometerConfig, LossConfig,
};
use proptest::prelude::*;
use std::f64::consts::FRAC_PI_2;

fn balanced(g: f64, alpha_abs: f64, k: u8, phi: f64) -> InterferometerConfig {
    InterferometerConfig::balanced(g, alpha_abs, FRAC_PI_2, k, phi)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The quadratic-element information can never fall below the
    /// linear-element information: the extra variance terms are nonnegative.
    #[test]
    fn quadratic_information_dominates(
        g in 0.1f64..1.8,
        aa in 0.0f64..2.5,
    ) {
        let (f1, f2) = qfi_ideal_parts(g, aa);
        prop_assert!(f1 > 0.0);
        prop_assert!(f2 >= f1, "f2 = {f2} < f1 = {f1}");
    }

    /// Photon loss can only degrade the optimal-point sensitivity, whichever
    /// side of the phase element it strikes.
    #[test]
    fn loss_never_improves_sensitivity(
        g in 0.2f64..1.6,
        aa in 0.3f64..2.5,
        t1 in 0.05f64..1.0,
        t2 in 0.05f64..1.0,
        k in 1u8..=2,
    ) {
        let config = balanced(g, aa, k, 0.0);
        let ideal = sensitivity_optimal(&config).unwrap();
        let lossy = sensitivity_lossy_optimal(&config, &LossConfig::new(t1, t2)).unwrap();
        prop_assert!(lossy >= ideal * (1.0 - 1e-12));
    }

    /// The working point phi = 0 minimizes the full-phase sensitivity.
    #[test]
    fn zero_phase_is_the_optimum(
        g in 0.3f64..1.5,
        aa in 0.3f64..2.0,
        phi in -0.5f64..0.5,
        k in 1u8..=2,
    ) {
        let best = sensitivity_optimal(&balanced(g, aa, k, 0.0)).unwrap();
        let at_phi = sensitivity_analytic(&balanced(g, aa, k, phi)).unwrap();
        prop_assert!(at_phi >= best * (1.0 - 1e-12), "phi = {phi}: {at_phi} < {best}");
    }

    /// For more than one photon the benchmark limits are strictly ordered.
    #[test]
    fn benchmark_limits_are_ordered(n in 1.0001f64..500.0) {
        let (sql, hl, shl) = limits(n).unwrap();
        prop_assert!(sql > hl);
        prop_assert!(hl > shl);
    }

    /// Three-term recurrence of the Laguerre polynomials on the negative
    /// axis used by the moment formulas.
    #[test]
    fn laguerre_recurrence(m in 1usize..7, x in -30.0f64..0.0) {
        let lhs = (m as f64 + 1.0) * laguerre(m + 1, x);
        let rhs = ((2 * m + 1) as f64 - x) * laguerre(m, x) - m as f64 * laguerre(m - 1, x);
        let scale = lhs.abs().max(rhs.abs()).max(1.0);
        prop_assert!((lhs - rhs).abs() <= 1e-11 * scale);
    }
}
