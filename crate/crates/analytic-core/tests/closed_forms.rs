//! Closed-form layer regression tests.
//!
//! Every numeric constant asserted here was produced by an independent
//! truncated-Fock-space computation (cross-checked again by the `fock-oracle`
//! crate's own test suite) and is frozen; these tests guard the closed forms
//! against drift, not against the oracle.

use analytic_core::{
    abar, laguerre, limits, n_total, qcrb, qfi_baseline_ideal, qfi_ideal, qfi_ideal_parts,
    quadrature_terms, sensitivity_analytic, sensitivity_lossy_optimal, sensitivity_optimal,
    AnalyticError, BaselineInput, InterferometerConfig, LossConfig,
};
use approx::{assert_abs_diff_eq, assert_relative_eq};
use std::f64::consts::{FRAC_PI_2, PI};

fn balanced(g: f64, alpha_abs: f64, k: u8) -> InterferometerConfig {
    InterferometerConfig::balanced(g, alpha_abs, FRAC_PI_2, k, 0.0)
}

#[test]
fn optimal_point_sensitivity_pins() {
    let d1 = sensitivity_optimal(&balanced(1.0, 1.0, 1)).unwrap();
    let d2 = sensitivity_optimal(&balanced(1.0, 1.0, 2)).unwrap();
    assert_relative_eq!(d1, 0.3620308304831553, max_relative = 1e-12);
    assert_relative_eq!(d2, 0.038984271361214046, max_relative = 1e-12);
}

#[test]
fn general_phase_form_reduces_to_optimal_point() {
    for &g in &[0.2, 0.5, 1.0, 1.5] {
        for &aa in &[0.5, 1.0, 3.0] {
            for k in [1u8, 2] {
                let config = balanced(g, aa, k);
                let at_zero = sensitivity_analytic(&config).unwrap();
                let optimal = sensitivity_optimal(&config).unwrap();
                assert_relative_eq!(at_zero, optimal, max_relative = 1e-10);
            }
        }
    }
}

#[test]
fn sensitivity_grows_away_from_the_working_point() {
    // The working point phi = 0 is optimal for both phase elements.
    for k in [1u8, 2] {
        let best = sensitivity_optimal(&balanced(1.0, 1.0, k)).unwrap();
        for &phi in &[-0.3, -0.1, 0.05, 0.2, 0.4] {
            let mut config = balanced(1.0, 1.0, k);
            config.phi = phi;
            assert!(sensitivity_analytic(&config).unwrap() > best);
        }
    }
}

#[test]
fn quadratic_element_beats_linear_at_unit_gain() {
    for &aa in &[0.5, 1.0, 2.0, 3.0] {
        let d1 = sensitivity_optimal(&balanced(1.0, aa, 1)).unwrap();
        let d2 = sensitivity_optimal(&balanced(1.0, aa, 2)).unwrap();
        assert!(d2 < d1, "expected d2 {d2} < d1 {d1} at |alpha| = {aa}");
    }
}

#[test]
fn quadrature_terms_working_point_values() {
    // At phi = 0 the balanced interferometer cancels exactly: the output
    // second moment is the vacuum value and the displacement part vanishes.
    let t = quadrature_terms(&balanced(1.0, 1.0, 2)).unwrap();
    assert_relative_eq!(t.second_moment(), 1.0, max_relative = 1e-13);
    // slope = 2 sinh^2 g (1 + 6 sinh^2 g) at |alpha| = 1, theta_alpha = pi/2.
    assert_relative_eq!(t.slope().abs(), 25.651370798606564, max_relative = 1e-12);
}

#[test]
fn quadrature_terms_consistency_with_sensitivity() {
    // The quadratic-element sensitivity is exactly the published accessor
    // combination sqrt(second moment)/|slope|, and the linear-element value
    // follows the elementary variance and slope expressions.
    for &phi in &[-0.25_f64, 0.1, 0.3] {
        let mut config = balanced(1.0, 1.0, 2);
        config.phi = phi;
        let t = quadrature_terms(&config).unwrap();
        let direct = sensitivity_analytic(&config).unwrap();
        assert_relative_eq!(
            direct,
            t.second_moment().sqrt() / t.slope().abs(),
            max_relative = 1e-14
        );
        let g: f64 = 1.0;
        let var_k1 = 1.0 + 2.0 * (2.0 * g).sinh().powi(2) * (phi / 2.0).sin().powi(2);
        let slope_k1 = 2.0 * g.sinh().powi(2) * (FRAC_PI_2 - phi).sin();
        let mut c1 = balanced(1.0, 1.0, 1);
        c1.phi = phi;
        assert_relative_eq!(
            sensitivity_analytic(&c1).unwrap(),
            var_k1.sqrt() / slope_k1.abs(),
            max_relative = 1e-14
        );
    }
}

#[test]
fn qfi_pins_and_thermal_identity() {
    let (f1, f2) = qfi_ideal_parts(1.0, 1.0);
    assert_relative_eq!(f1, 33.93795787185746, max_relative = 1e-12);
    assert_relative_eq!(f2, 4537.476412676174, max_relative = 1e-12);
    let (f1s, f2s) = qfi_ideal_parts(0.5, 0.5);
    assert_relative_eq!(f1s, 1.8001064509048526, max_relative = 1e-12);
    assert_relative_eq!(f2s, 12.872964415420718, max_relative = 1e-12);
    // Vacuum input: the internal mode is thermal, Var n = s^2 + s with
    // s = sinh^2 g, so the linear-phase information is 4(s^2 + s).
    for &g in &[0.5f64, 0.8, 1.0, 1.5, 2.0] {
        let s = g.sinh().powi(2);
        let (f1v, _) = qfi_ideal_parts(g, 0.0);
        assert_relative_eq!(f1v, 4.0 * (s * s + s), max_relative = 1e-10);
    }
}

#[test]
fn qfi_ideal_selects_order() {
    let config = balanced(1.0, 1.0, 2);
    let (f1, f2) = qfi_ideal_parts(1.0, 1.0);
    assert_eq!(qfi_ideal(&config, 1).unwrap(), f1);
    assert_eq!(qfi_ideal(&config, 2).unwrap(), f2);
    assert!(matches!(
        qfi_ideal(&config, 3),
        Err(AnalyticError::UnsupportedK(3))
    ));
}

#[test]
fn moment_and_laguerre_pins() {
    assert_relative_eq!(abar(1, 1.0, 1.0), 2.7621956910836314, max_relative = 1e-12);
    assert_relative_eq!(abar(4, 1.0, 1.0), 760.4034476006608, max_relative = 1e-12);
    // L_0 = 1, L_1(x) = 1 - x, L_2(x) = 1 - 2x + x^2/2.
    assert_eq!(laguerre(0, -2.5), 1.0);
    assert_abs_diff_eq!(laguerre(1, -2.5), 3.5, epsilon = 1e-14);
    assert_abs_diff_eq!(laguerre(2, -2.0), 1.0 + 4.0 + 2.0, epsilon = 1e-13);
    // A_m = m! sinh^{2m} g L_m(-|alpha|^2).
    let g: f64 = 0.8;
    let aa: f64 = 1.3;
    let s2 = g.sinh().powi(2);
    assert_relative_eq!(
        abar(2, g, aa),
        2.0 * s2 * s2 * laguerre(2, -aa * aa),
        max_relative = 1e-13
    );
}

#[test]
fn lossy_sensitivity_pins() {
    let k1 = balanced(1.0, 1.0, 1);
    let k2 = balanced(1.0, 1.0, 2);
    let both = LossConfig::new(0.6, 0.6);
    let internal = LossConfig::new(0.6, 1.0);
    let external = LossConfig::new(1.0, 0.6);
    assert_relative_eq!(
        sensitivity_lossy_optimal(&k1, &both).unwrap(),
        0.7780918996284728,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        sensitivity_lossy_optimal(&k2, &both).unwrap(),
        0.08378663695187769,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        sensitivity_lossy_optimal(&k1, &internal).unwrap(),
        0.6780838866659312,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        sensitivity_lossy_optimal(&k1, &external).unwrap(),
        0.46737979242496697,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        sensitivity_lossy_optimal(&k2, &external).unwrap(),
        0.0503284779,
        max_relative = 1e-9
    );
}

#[test]
fn lossless_limit_is_bit_exact() {
    // T1 = T2 = 1 must reproduce the ideal optimal-point value exactly,
    // not merely to rounding: the loss bracket vanishes identically and
    // the square root of a squared IEEE double is the double itself.
    let ideal = LossConfig::default();
    for &g in &[0.3, 0.7, 1.0, 1.6] {
        for &aa in &[0.4, 1.0, 2.5] {
            for k in [1u8, 2] {
                let config = balanced(g, aa, k);
                let lossy = sensitivity_lossy_optimal(&config, &ideal).unwrap();
                let exact = sensitivity_optimal(&config).unwrap();
                assert_eq!(lossy, exact, "bitwise at g={g}, |alpha|={aa}, k={k}");
            }
        }
    }
}

#[test]
fn loss_always_degrades_sensitivity() {
    for &g in &[0.5, 1.0, 1.5] {
        for &t in &[0.3, 0.6, 0.9] {
            for k in [1u8, 2] {
                let config = balanced(g, 1.0, k);
                let ideal = sensitivity_optimal(&config).unwrap();
                for loss in [
                    LossConfig::new(t, 1.0),
                    LossConfig::new(1.0, t),
                    LossConfig::new(t, t),
                ] {
                    let lossy = sensitivity_lossy_optimal(&config, &loss).unwrap();
                    assert!(
                        lossy >= ideal,
                        "loss {loss:?} improved the sensitivity at g={g}, k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn internal_loss_hurts_more_than_external() {
    for &g in &[0.5, 1.0, 1.5] {
        for &t in &[0.3, 0.6, 0.9] {
            for k in [1u8, 2] {
                let config = balanced(g, 1.0, k);
                let int = sensitivity_lossy_optimal(&config, &LossConfig::new(t, 1.0)).unwrap();
                let ext = sensitivity_lossy_optimal(&config, &LossConfig::new(1.0, t)).unwrap();
                assert!(
                    int > ext,
                    "internal loss must dominate: t={t}, g={g}, k={k}"
                );
            }
        }
    }
}

#[test]
fn photon_budget_and_benchmark_limits() {
    let config = balanced(1.0, 1.0, 2);
    let n = n_total(&config);
    let g: f64 = 1.0;
    assert_relative_eq!(
        n,
        (2.0 * g).cosh() + 2.0 * g.sinh().powi(2),
        max_relative = 1e-14
    );
    let (sql, hl, shl) = limits(n).unwrap();
    assert_relative_eq!(sql, 0.3914984052295251, max_relative = 1e-12);
    assert_relative_eq!(hl, 0.15327100129726146, max_relative = 1e-12);
    assert_relative_eq!(shl, 0.023491999838665123, max_relative = 1e-12);
    assert!(matches!(limits(0.0), Err(AnalyticError::NonpositiveN(_))));
    assert!(matches!(limits(-2.0), Err(AnalyticError::NonpositiveN(_))));
}

#[test]
fn cramer_rao_bound_pins_and_errors() {
    assert_relative_eq!(
        qcrb(4537.476412676174, 1).unwrap(),
        0.014845430966117618,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        qcrb(4537.476412676174, 4).unwrap(),
        0.007422715483058809,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        qcrb(33.93795787185746, 1).unwrap(),
        0.17165527221919416,
        max_relative = 1e-12
    );
    assert!(matches!(qcrb(0.0, 1), Err(AnalyticError::NonpositiveF(_))));
    assert!(matches!(qcrb(-3.0, 1), Err(AnalyticError::NonpositiveF(_))));
    assert!(matches!(qcrb(10.0, 0), Err(AnalyticError::BadTrials(0))));
}

#[test]
fn reference_input_qfi_pins_and_reductions() {
    // Two coherent inputs with the second amplitude sent to zero, and the
    // squeezed-vacuum input with the squeezing sent to zero, both collapse
    // to the single-coherent-input information.
    let cs_only = BaselineInput::CsCs {
        alpha_abs: 1.0,
        beta_abs: 0.0,
    };
    let svs_off = BaselineInput::CsSvs {
        alpha_abs: 1.0,
        r: 0.0,
    };
    for &g in &[0.5, 1.0, 1.5] {
        let (f1g, _) = qfi_ideal_parts(g, 1.0);
        assert_relative_eq!(
            qfi_baseline_ideal(&cs_only, g),
            f1g,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            qfi_baseline_ideal(&svs_off, g),
            f1g,
            max_relative = 1e-12
        );
    }
    let cs_cs = BaselineInput::CsCs {
        alpha_abs: 1.0,
        beta_abs: 1.0,
    };
    let cs_svs = BaselineInput::CsSvs {
        alpha_abs: 1.0,
        r: 1.0,
    };
    assert_relative_eq!(
        qfi_baseline_ideal(&cs_cs, 1.0),
        124.35041648429672,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        qfi_baseline_ideal(&cs_svs, 1.0),
        285.3053333384026,
        max_relative = 1e-12
    );
    assert_eq!(cs_cs.n_input(), 2.0);
    assert_relative_eq!(
        cs_svs.n_input(),
        1.0 + 1.0f64.sinh().powi(2),
        max_relative = 1e-14
    );
}

#[test]
fn reference_input_mean_photon_pins() {
    use analytic_core::baseline_mean_photon;
    let cs_cs = BaselineInput::CsCs {
        alpha_abs: 1.0,
        beta_abs: 1.0,
    };
    let cs_svs = BaselineInput::CsSvs {
        alpha_abs: 1.0,
        r: 1.0,
    };
    assert_relative_eq!(
        baseline_mean_photon(&cs_cs, 1.0),
        8.770153944472465,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        baseline_mean_photon(&cs_svs, 1.0),
        6.050724795585691,
        max_relative = 1e-12
    );
}

#[test]
fn configuration_validation_errors() {
    // Unbalanced gains are rejected by the closed forms that assume balance.
    let mut config = balanced(1.0, 1.0, 2);
    config.g2 = 0.7;
    assert!(matches!(
        sensitivity_optimal(&config),
        Err(AnalyticError::NotBalanced(_))
    ));
    let mut skew = balanced(1.0, 1.0, 2);
    skew.theta2 = 1.0;
    assert!(matches!(
        quadrature_terms(&skew),
        Err(AnalyticError::NotBalanced(_))
    ));
    // Unsupported nonlinearity order.
    let bad_k = InterferometerConfig::balanced(1.0, 1.0, FRAC_PI_2, 5, 0.0);
    assert!(matches!(
        sensitivity_analytic(&bad_k),
        Err(AnalyticError::UnsupportedK(5))
    ));
    // A stationary working point has no defined error propagation: with
    // theta_alpha = 0 the linear-phase slope vanishes at phi = 0.
    let stationary = InterferometerConfig::balanced(1.0, 1.0, 0.0, 1, 0.0);
    assert!(matches!(
        sensitivity_analytic(&stationary),
        Err(AnalyticError::ZeroDerivative(_))
    ));
    // Zero gain with the quadratic element: no photons pass the phase
    // element twice-over, the signal does not move.
    let no_gain = InterferometerConfig::balanced(0.0, 1.0, FRAC_PI_2, 2, 0.0);
    assert!(matches!(
        sensitivity_optimal(&no_gain),
        Err(AnalyticError::ZeroDerivative(_))
    ));
    // Transmissivities must lie in (0, 1].
    assert!(matches!(
        LossConfig::new(0.0, 1.0).validate(),
        Err(AnalyticError::InvalidT { .. })
    ));
    assert!(matches!(
        LossConfig::new(0.5, 1.2).validate(),
        Err(AnalyticError::InvalidT { .. })
    ));
}

#[test]
fn balanced_constructor_and_phase_convention() {
    let config = balanced(1.0, 1.0, 2);
    assert!(config.is_balanced());
    assert_eq!(config.theta1, 0.0);
    assert_eq!(config.theta2, PI);
    assert_eq!(config.g1, config.g2);
    assert!(config.require_standard_balanced().is_ok());
    let default = InterferometerConfig::default();
    assert_eq!(default.k, 2);
    assert_eq!(default.theta_alpha, FRAC_PI_2);
    assert!(default.is_balanced());
}
