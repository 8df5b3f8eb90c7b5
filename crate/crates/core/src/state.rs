//! Tripartite density matrices and partial transposition.
//!
//! The basis ordering convention is fixed once here and inherited everywhere:
//! the flat index of |i₁i₂i₃⟩ is `i₁·d² + i₂·d + i₃`, subsystem 1 most
//! significant.

use crate::error::{Error, StateDefect};
use crate::matrix::{vec_norm, Complex64, ComplexMatrix};
use crate::spectral::hermitian_eigenvalues;

/// Elementwise Hermiticity tolerance for validation.
pub const STATE_HERMITICITY_TOL: f64 = 1e-12;
/// Unit-trace tolerance for validation.
pub const STATE_TRACE_TOL: f64 = 1e-12;
/// Smallest admissible eigenvalue; slightly negative because noise mixtures
/// are assembled in floating point.
pub const STATE_PSD_TOL: f64 = -1e-10;
/// Subsystem-swap residual above which a state does not count as
/// permutation invariant.
pub const PERMUTATION_TOL: f64 = 1e-8;

pub(crate) fn flat_index(i1: usize, i2: usize, i3: usize, d: usize) -> usize {
    i1 * d * d + i2 * d + i3
}

pub(crate) fn split_index(idx: usize, d: usize) -> (usize, usize, usize) {
    (idx / (d * d), (idx / d) % d, idx % d)
}

/// Partial transpose of a d³×d³ matrix over one subsystem (1, 2 or 3).
///
/// Works on arbitrary matrices of the right size, not only density matrices;
/// the bra/ket indices of the chosen factor are exchanged.
pub fn partial_transpose_matrix(
    m: &ComplexMatrix,
    d: usize,
    subsystem: usize,
) -> Result<ComplexMatrix, Error> {
    let dim = d * d * d;
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::ShapeMismatch {
            expected: (dim, dim),
            found: (m.rows(), m.cols()),
        });
    }
    if !(1..=3).contains(&subsystem) {
        return Err(Error::BadSubsystem { index: subsystem });
    }
    Ok(ComplexMatrix::from_fn(dim, dim, |r, c| {
        let (r1, r2, r3) = split_index(r, d);
        let (c1, c2, c3) = split_index(c, d);
        let (row, col) = match subsystem {
            1 => (flat_index(c1, r2, r3, d), flat_index(r1, c2, c3, d)),
            2 => (flat_index(r1, c2, r3, d), flat_index(c1, r2, c3, d)),
            _ => (flat_index(r1, r2, c3, d), flat_index(c1, c2, r3, d)),
        };
        m[(row, col)]
    }))
}

/// A validated d×d×d density matrix.
///
/// Construction checks Hermiticity, unit trace and positive semidefiniteness;
/// the state is immutable afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct TripartiteState {
    d: usize,
    rho: ComplexMatrix,
}

impl TripartiteState {
    /// Validate a candidate density matrix.
    pub fn new(d: usize, rho: ComplexMatrix) -> Result<Self, Error> {
        if d < 2 {
            return Err(Error::BadDimension { d, min: 2 });
        }
        let dim = d * d * d;
        if rho.rows() != dim || rho.cols() != dim {
            return Err(StateDefect::WrongSize {
                expected: dim,
                found_rows: rho.rows(),
                found_cols: rho.cols(),
            }
            .into());
        }
        let residual = rho.hermiticity_residual();
        if !residual.is_finite() || residual > STATE_HERMITICITY_TOL {
            return Err(StateDefect::NotHermitian { residual }.into());
        }
        let trace = rho.trace();
        if (trace.re - 1.0).abs() > STATE_TRACE_TOL || trace.im.abs() > STATE_TRACE_TOL {
            return Err(StateDefect::TraceNotOne { trace: trace.re }.into());
        }
        // Hermiticity within 1e-12 already verified, so the eigen solve
        // cannot reject the input.
        let eigenvalues = hermitian_eigenvalues(&rho)?;
        let min_eigenvalue = eigenvalues.last().copied().unwrap_or(0.0);
        if min_eigenvalue < STATE_PSD_TOL {
            return Err(StateDefect::NotPositive { min_eigenvalue }.into());
        }
        Ok(Self { d, rho })
    }

    /// Density matrix of a pure state vector of length d³ (normalized here).
    pub fn from_pure(d: usize, psi: &[Complex64]) -> Result<Self, Error> {
        let dim = d * d * d;
        if psi.len() != dim {
            return Err(StateDefect::WrongSize {
                expected: dim,
                found_rows: psi.len(),
                found_cols: 1,
            }
            .into());
        }
        let norm = vec_norm(psi);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ParamOutOfRange {
                name: "state vector norm",
                value: norm,
            });
        }
        let rho = ComplexMatrix::from_fn(dim, dim, |r, c| psi[r] * psi[c].conj() / (norm * norm));
        Self::new(d, rho)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Total Hilbert-space dimension d³.
    pub fn dim(&self) -> usize {
        self.d * self.d * self.d
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    /// Partial transpose over subsystem 1, 2 or 3. The result is Hermitian
    /// and unit trace but in general no longer positive, so it comes back as
    /// a plain matrix.
    pub fn partial_transpose(&self, subsystem: usize) -> Result<ComplexMatrix, Error> {
        partial_transpose_matrix(&self.rho, self.d, subsystem)
    }

    /// tr(ρ²).
    pub fn purity(&self) -> f64 {
        self.rho.data().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Matrix with subsystems `a` and `b` exchanged (1-based labels).
    pub fn swap_subsystems(&self, a: usize, b: usize) -> Result<ComplexMatrix, Error> {
        if !(1..=3).contains(&a) || !(1..=3).contains(&b) {
            return Err(Error::BadSubsystem { index: a.max(b) });
        }
        let d = self.d;
        let perm = |idx: usize| {
            let mut t = [0usize; 3];
            let (t1, t2, t3) = split_index(idx, d);
            t[0] = t1;
            t[1] = t2;
            t[2] = t3;
            t.swap(a - 1, b - 1);
            flat_index(t[0], t[1], t[2], d)
        };
        let dim = self.dim();
        Ok(ComplexMatrix::from_fn(dim, dim, |r, c| {
            self.rho[(perm(r), perm(c))]
        }))
    }

    /// Largest elementwise deviation of ρ from its subsystem-swapped images,
    /// over the two generating swaps (1,2) and (2,3).
    pub fn permutation_residual(&self) -> f64 {
        let s12 = self.swap_subsystems(1, 2).expect("valid labels");
        let s23 = self.swap_subsystems(2, 3).expect("valid labels");
        self.rho.max_abs_diff(&s12).max(self.rho.max_abs_diff(&s23))
    }

    pub fn is_permutation_invariant(&self) -> bool {
        self.permutation_residual() <= PERMUTATION_TOL
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::kron;
    use crate::rng::Prng;
    use alloc::vec;
    use alloc::vec::Vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_state(d: usize, seed: u64) -> TripartiteState {
        // Mixture of a few random pure states: valid and full of structure.
        let mut rng = Prng::new(seed);
        let dim = d * d * d;
        let mut rho = ComplexMatrix::zeros(dim, dim);
        for _ in 0..4 {
            let psi: Vec<Complex64> = (0..dim).map(|_| rng.complex()).collect();
            let n2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
            let w = 0.25 / n2;
            for r in 0..dim {
                for q in 0..dim {
                    rho[(r, q)] += psi[r] * psi[q].conj() * w;
                }
            }
        }
        TripartiteState::new(d, rho).unwrap()
    }

    #[test]
    fn diagonal_states_are_pt_invariant() {
        let entries = [0.5, 0.1, 0.05, 0.05, 0.1, 0.1, 0.05, 0.05];
        let rho = ComplexMatrix::diag(&entries);
        let state = TripartiteState::new(2, rho.clone()).unwrap();
        for k in 1..=3 {
            assert_eq!(state.partial_transpose(k).unwrap(), rho);
        }
    }

    #[test]
    fn pt_on_a_basis_element() {
        // |0⟩⟨1| ⊗ |0⟩⟨0| ⊗ |0⟩⟨0| --T1--> |1⟩⟨0| ⊗ |0⟩⟨0| ⊗ |0⟩⟨0|
        let mut e01 = ComplexMatrix::zeros(2, 2);
        e01[(0, 1)] = c(1.0, 0.0);
        let mut e00 = ComplexMatrix::zeros(2, 2);
        e00[(0, 0)] = c(1.0, 0.0);
        let m = kron(&kron(&e01, &e00), &e00);
        let pt = partial_transpose_matrix(&m, 2, 1).unwrap();
        let expected = kron(&kron(&e01.transpose(), &e00), &e00);
        assert_eq!(pt, expected);
    }

    #[test]
    fn pt_is_an_involution() {
        let state = random_state(2, 91);
        for k in 1..=3 {
            let once = state.partial_transpose(k).unwrap();
            let twice = partial_transpose_matrix(&once, 2, k).unwrap();
            assert!(state.rho().max_abs_diff(&twice) < 1e-15);
        }
    }

    #[test]
    fn pt_preserves_trace_and_hermiticity() {
        let state = random_state(2, 92);
        for k in 1..=3 {
            let pt = state.partial_transpose(k).unwrap();
            assert!((pt.trace() - state.rho().trace()).norm() < 1e-14);
            assert!(pt.is_hermitian(1e-13));
        }
    }

    #[test]
    fn transposes_commute_across_subsystems() {
        let state = random_state(2, 93);
        let a = partial_transpose_matrix(&state.partial_transpose(1).unwrap(), 2, 3).unwrap();
        let b = partial_transpose_matrix(&state.partial_transpose(3).unwrap(), 2, 1).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn rejects_bad_subsystem() {
        let state = random_state(2, 94);
        assert!(matches!(
            state.partial_transpose(0),
            Err(Error::BadSubsystem { index: 0 })
        ));
        assert!(matches!(
            state.partial_transpose(4),
            Err(Error::BadSubsystem { index: 4 })
        ));
    }

    #[test]
    fn validation_rejects_defects() {
        // wrong size
        let err = TripartiteState::new(2, ComplexMatrix::identity(4)).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidState(StateDefect::WrongSize { .. })
        ));

        // non-Hermitian
        let mut m = ComplexMatrix::identity(8).scale(1.0 / 8.0);
        m[(0, 1)] = c(0.1, 0.0);
        let err = TripartiteState::new(2, m).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidState(StateDefect::NotHermitian { .. })
        ));

        // trace off
        let err = TripartiteState::new(2, ComplexMatrix::identity(8)).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidState(StateDefect::TraceNotOne { .. })
        ));

        // not positive
        let mut entries = vec![0.0; 8];
        entries[0] = 1.5;
        entries[1] = -0.5;
        let err = TripartiteState::new(2, ComplexMatrix::diag(&entries)).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidState(StateDefect::NotPositive { .. })
        ));

        // d too small
        let err = TripartiteState::new(1, ComplexMatrix::identity(1)).unwrap_err();
        assert!(matches!(err, Error::BadDimension { d: 1, min: 2 }));
    }

    #[test]
    fn swap_subsystems_is_self_inverse() {
        let state = random_state(2, 95);
        for (a, b) in [(1, 2), (2, 3), (1, 3)] {
            let swapped = state.swap_subsystems(a, b).unwrap();
            let state2 = TripartiteState::new(2, swapped).unwrap();
            let back = state2.swap_subsystems(a, b).unwrap();
            assert!(state.rho().max_abs_diff(&back) < 1e-15);
        }
    }

    #[test]
    fn random_states_are_not_permutation_invariant() {
        let state = random_state(2, 96);
        assert!(!state.is_permutation_invariant());
    }
}
