//! Spectral decompositions: Hermitian eigenvalues, singular values, trace norm.
//!
//! Both solvers are Jacobi iterations, chosen because every matrix this crate
//! touches is small and dense: a cyclic two-sided Jacobi for Hermitian
//! matrices and a one-sided (Hestenes) Jacobi for singular values. The
//! one-sided variant keeps exact zero columns at exactly zero, which matters
//! for the rank-deficient constructed matrices of the criteria.

use alloc::vec::Vec;

// Inherent f64 math is std-only; no_std builds route through the trait.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::matrix::{Complex64, ComplexMatrix};

/// Sweep cap for both Jacobi iterations.
const MAX_SWEEPS: usize = 100;
/// Off-diagonal tolerance, relative to the Frobenius norm of the input.
const OFF_DIAG_TOL: f64 = 1e-12;
/// How far from Hermitian an input may be before it is rejected.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Cosine/sine pair of the Jacobi rotation for off-diagonal ratio
/// τ = (b − a) / 2|β|, taking the smaller-angle root for stability.
fn jacobi_rotation(tau: f64) -> (f64, f64) {
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, t * c)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix.
///
/// Eigenvalues come back in descending order; the matching eigenvectors are
/// the columns of the returned matrix.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix), Error> {
    let residual = m.hermiticity_residual();
    if residual > HERMITICITY_TOL {
        return Err(Error::NotHermitian { residual });
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAG_TOL * m.frobenius_norm();

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let beta = a[(p, q)];
                let beta_abs = beta.norm();
                if beta_abs <= threshold {
                    continue;
                }
                rotated = true;
                let phase = beta / beta_abs;
                let alpha = a[(p, p)].re;
                let gamma = a[(q, q)].re;
                let tau = (gamma - alpha) / (2.0 * beta_abs);
                let (c, s) = jacobi_rotation(tau);
                let phase_conj = phase.conj();

                // A ← A·J
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * (phase_conj * s);
                    a[(k, q)] = akp * s + akq * (phase_conj * c);
                }
                // A ← J†·A
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - aqk * (phase * s);
                    a[(q, k)] = apk * s + aqk * (phase * c);
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                // V ← V·J
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * (phase_conj * s);
                    v[(k, q)] = vkp * s + vkq * (phase_conj * c);
                }
            }
        }
        converged = !rotated;
    }
    if !converged {
        let mut worst = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                worst = worst.max(a[(p, q)].norm());
            }
        }
        if worst > threshold {
            return Err(Error::NonConvergence { residual: worst });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by(|&i, &j| a[(j, j)].re.partial_cmp(&a[(i, i)].re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok((values, vectors))
}

/// Eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>, Error> {
    hermitian_eigen(m).map(|(values, _)| values)
}

/// Singular values, non-negative and descending, via one-sided Jacobi.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>, Error> {
    // Work with at least as many rows as columns; σ(Aᵀ) = σ(A).
    let mut a = if m.rows() >= m.cols() {
        m.clone()
    } else {
        m.transpose()
    };
    let rows = a.rows();
    let cols = a.cols();

    // Columns below roundoff level count as zero. Without the floor, the
    // noise left behind after a rotation annihilates a parallel pair keeps
    // relative coupling near 1 and the sweep never settles.
    let fro = a.frobenius_norm();
    let floor_sq = (f64::EPSILON * fro) * (f64::EPSILON * fro);

    let mut converged = cols < 2;
    let mut worst_rel = 0.0f64;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        worst_rel = 0.0;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let mut npp = 0.0f64;
                let mut nqq = 0.0f64;
                let mut g = Complex64::new(0.0, 0.0);
                for k in 0..rows {
                    let u = a[(k, p)];
                    let w = a[(k, q)];
                    npp += u.norm_sqr();
                    nqq += w.norm_sqr();
                    g += u.conj() * w;
                }
                let g_abs = g.norm();
                let scale = (npp * nqq).sqrt();
                if npp <= floor_sq || nqq <= floor_sq || g_abs <= OFF_DIAG_TOL * scale {
                    continue;
                }
                rotated = true;
                worst_rel = worst_rel.max(g_abs / scale);
                let phase = g / g_abs;
                let tau = (nqq - npp) / (2.0 * g_abs);
                let (c, s) = jacobi_rotation(tau);
                let phase_conj = phase.conj();
                for k in 0..rows {
                    let u = a[(k, p)];
                    let w = a[(k, q)];
                    a[(k, p)] = u * c - w * (phase_conj * s);
                    a[(k, q)] = u * s + w * (phase_conj * c);
                }
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::NonConvergence {
            residual: worst_rel,
        });
    }

    let mut sigma: Vec<f64> = (0..cols)
        .map(|j| (0..rows).map(|k| a[(k, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sigma.sort_unstable_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(sigma)
}

/// Trace norm: sum of singular values.
///
/// Hermitian inputs take the eigenvalue route (sum of |λ|); everything else
/// goes through the SVD. The two paths agree to well below the tolerances
/// used anywhere in the crate.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64, Error> {
    if m.is_square() && m.hermiticity_residual() <= HERMITICITY_TOL {
        Ok(hermitian_eigenvalues(m)?.iter().map(|x| x.abs()).sum())
    } else {
        Ok(singular_values(m)?.iter().sum())
    }
}
