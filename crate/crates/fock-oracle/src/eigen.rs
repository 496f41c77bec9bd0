//! Self-contained dense eigensolvers for the modest matrix sizes this crate
//! needs (dimension <= ~300): an implicit-shift QL iteration for real
//! symmetric tridiagonal matrices and a Householder reduction for complex
//! Hermitian matrices that feeds it.

use num_complex::Complex64;

use crate::error::OracleError;

/// Implicit-shift QL iteration with eigenvector accumulation.
///
/// `d` holds the diagonal on entry and the eigenvalues on exit; `e[i]` is the
/// coupling between rows i and i+1 (entry `e[n-1]` is workspace). If `z` is
/// given it must hold an n x n column-major basis (usually the identity) and
/// receives the eigenvectors as columns. Eigenpairs are sorted ascending.
pub(crate) fn tridiag_eigh(
    d: &mut [f64],
    e: &mut [f64],
    mut z: Option<&mut [f64]>,
) -> Result<(), OracleError> {
    let n = d.len();
    assert_eq!(e.len(), n, "off-diagonal workspace must have length n");
    if let Some(zz) = z.as_deref() {
        assert_eq!(zz.len(), n * n, "eigenvector workspace must be n x n");
    }
    if n <= 1 {
        return Ok(());
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            // Locate the first negligible coupling at or beyond l.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 100 {
                return Err(OracleError::EigenFailure);
            }

            // Wilkinson-style shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            let denom = g + if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + e[l] / denom;

            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;

            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(zz) = z.as_deref_mut() {
                    // Rotate eigenvector columns i and i+1.
                    let (col_i, col_ip1) = zz.split_at_mut((i + 1) * n);
                    let col_i = &mut col_i[i * n..(i + 1) * n];
                    let col_ip1 = &mut col_ip1[..n];
                    for k in 0..n {
                        f = col_ip1[k];
                        col_ip1[k] = s * col_i[k] + c * f;
                        col_i[k] = c * col_i[k] - s * f;
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // Sort ascending, carrying eigenvector columns along.
    for i in 0..n {
        let mut kmin = i;
        for j in i + 1..n {
            if d[j] < d[kmin] {
                kmin = j;
            }
        }
        if kmin != i {
            d.swap(i, kmin);
            if let Some(zz) = z.as_deref_mut() {
                for k in 0..n {
                    zz.swap(i * n + k, kmin * n + k);
                }
            }
        }
    }
    Ok(())
}

/// Eigendecomposition of a complex Hermitian matrix given row-major as
/// `a[i*n + j]`. Returns the eigenvalues ascending and, if requested, the
/// eigenvectors column-major (`vecs[j*n + i]` = component i of eigenvector j).
///
/// Householder reduction to complex tridiagonal form, a diagonal phase
/// similarity that makes the couplings real, the QL iteration above, and a
/// back-transformation of the vectors.
pub(crate) fn hermitian_eigh(
    a: &[Complex64],
    n: usize,
    want_vectors: bool,
) -> Result<(Vec<f64>, Option<Vec<Complex64>>), OracleError> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    if n == 0 {
        return Ok((Vec::new(), if want_vectors { Some(Vec::new()) } else { None }));
    }
    if n == 1 {
        return Ok((
            vec![a[0].re],
            if want_vectors {
                Some(vec![Complex64::new(1.0, 0.0)])
            } else {
                None
            },
        ));
    }

    let mut w = a.to_vec();
    // Householder reflectors (v, beta) with v supported on rows k+1..n.
    let mut reflectors: Vec<(Vec<Complex64>, f64)> = Vec::new();
    // Complex couplings t_k between rows k and k+1 of the reduced matrix.
    let mut t = vec![Complex64::new(0.0, 0.0); n - 1];

    for k in 0..n - 2 {
        // Column k below the diagonal.
        let mut normx_sq = 0.0;
        for i in k + 1..n {
            normx_sq += w[i * n + k].norm_sqr();
        }
        let normx = normx_sq.sqrt();
        if normx == 0.0 {
            t[k] = Complex64::new(0.0, 0.0);
            reflectors.push((vec![Complex64::new(0.0, 0.0); n], 0.0));
            continue;
        }
        let alpha0 = w[(k + 1) * n + k];
        let phase = if alpha0.norm() > 0.0 {
            alpha0 / alpha0.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };

        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[k + 1] = alpha0 + phase * normx;
        for i in k + 2..n {
            v[i] = w[i * n + k];
        }
        // ||v||^2 = 2 normx (normx + |alpha0|), beta = 2/||v||^2.
        let beta = 1.0 / (normx * (normx + alpha0.norm()));

        // Hermitian rank-2 update of the trailing block:
        // p = beta A v, kappa = beta/2 v† p, q = p - kappa v,
        // A <- A - q v† - v q†.
        let mut p = vec![Complex64::new(0.0, 0.0); n];
        for i in k + 1..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in k + 1..n {
                acc += w[i * n + j] * v[j];
            }
            p[i] = beta * acc;
        }
        let mut vtp = Complex64::new(0.0, 0.0);
        for i in k + 1..n {
            vtp += v[i].conj() * p[i];
        }
        let kappa = 0.5 * beta * vtp;
        for i in k + 1..n {
            p[i] -= kappa * v[i];
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let delta = p[i] * v[j].conj() + v[i] * p[j].conj();
                w[i * n + j] -= delta;
            }
        }

        t[k] = -phase * normx;
        w[(k + 1) * n + k] = t[k];
        w[k * n + k + 1] = t[k].conj();
        reflectors.push((v, beta));
    }
    t[n - 2] = w[(n - 1) * n + (n - 2)];

    // Diagonal phase similarity making the couplings real nonnegative.
    let mut ph = vec![Complex64::new(1.0, 0.0); n];
    let mut e = vec![0.0; n];
    for k in 0..n - 1 {
        let mag = t[k].norm();
        e[k] = mag;
        ph[k + 1] = if mag > 0.0 { ph[k] * (t[k] / mag) } else { ph[k] };
    }
    let mut d = vec![0.0; n];
    for i in 0..n {
        d[i] = w[i * n + i].re;
    }

    if !want_vectors {
        tridiag_eigh(&mut d, &mut e, None)?;
        return Ok((d, None));
    }

    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    tridiag_eigh(&mut d, &mut e, Some(&mut z))?;

    // Back-transform each eigenvector: u = H_0 ... H_{n-3} (D z_col).
    let mut vecs = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        let mut u: Vec<Complex64> = (0..n).map(|i| ph[i] * z[j * n + i]).collect();
        for k in (0..reflectors.len()).rev() {
            let (v, beta) = &reflectors[k];
            if *beta == 0.0 {
                continue;
            }
            let mut s = Complex64::new(0.0, 0.0);
            for i in k + 1..n {
                s += v[i].conj() * u[i];
            }
            s *= *beta;
            for i in k + 1..n {
                u[i] -= s * v[i];
            }
        }
        vecs[j * n..(j + 1) * n].copy_from_slice(&u);
    }
    Ok((d, Some(vecs)))
}
