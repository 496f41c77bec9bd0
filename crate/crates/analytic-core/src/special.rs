//! Special functions: Laguerre polynomials and the normally-ordered moments
//! of the internal mode after the first OPA.

use crate::fault_points;

/// Laguerre polynomial L_m(x) by the three-term recurrence
/// (n+1) L_{n+1}(x) = (2n+1-x) L_n(x) - n L_{n-1}(x).
///
/// Exact (up to rounding) for the low polynomial degrees used here; orders
/// above 8 are outside this crate's domain and rejected as a contract
/// violation.
pub fn laguerre(m: usize, x: f64) -> f64 {
    assert!(m <= 8, "laguerre order m={m} exceeds the supported maximum 8");
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 - x;
    for n in 1..m {
        let next = ((2 * n + 1) as f64 - x) * cur - n as f64 * prev;
        prev = cur;
        cur = next / (n + 1) as f64;
    }
    cur
}

/// Normally-ordered moment A_m = <b†^m b^m> = m! sinh^{2m}(g) L_m(-|alpha|^2)
/// of the internal mode after the first OPA acting on |alpha>⊗|0>.
pub fn abar(m: usize, g: f64, alpha_abs: f64) -> f64 {
    assert!((1..=4).contains(&m), "abar order m={m} must be 1..=4");
    const FACT: [f64; 5] = [1.0, 1.0, 2.0, 6.0, 24.0];
    let s = g.sinh();
    FACT[m] * s.powi(2 * m as i32) * laguerre(m, -(alpha_abs * alpha_abs))
        * fault_points::abar_scale(m)
}
