//! Error types shared across the crate.

use core::fmt;

/// Why a matrix failed to validate as a tripartite density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateDefect {
    /// Size is not d³×d³ for the declared local dimension.
    WrongSize {
        expected: usize,
        found_rows: usize,
        found_cols: usize,
    },
    /// Largest elementwise deviation from the conjugate transpose.
    NotHermitian { residual: f64 },
    /// Trace differs from one.
    TraceNotOne { trace: f64 },
    /// Smallest eigenvalue is below the PSD tolerance.
    NotPositive { min_eigenvalue: f64 },
}

impl fmt::Display for StateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateDefect::WrongSize { expected, found_rows, found_cols } => write!(
                f,
                "matrix is {found_rows}x{found_cols}, expected {expected}x{expected} for a tripartite state"
            ),
            StateDefect::NotHermitian { residual } => {
                write!(f, "matrix is not Hermitian (elementwise residual {residual:.3e})")
            }
            StateDefect::TraceNotOne { trace } => {
                write!(f, "trace is {trace:.17} instead of 1")
            }
            StateDefect::NotPositive { min_eigenvalue } => {
                write!(f, "matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")
            }
        }
    }
}

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operation requires a Hermitian input.
    NotHermitian { residual: f64 },
    /// Iterative decomposition did not converge within the sweep cap.
    NonConvergence { residual: f64 },
    /// Subsystem index outside {1, 2, 3}.
    BadSubsystem { index: usize },
    /// Local dimension below the minimum the operation supports.
    BadDimension { d: usize, min: usize },
    /// The partial-transpose criterion is stated for qubits only.
    QubitsOnly { d: usize },
    /// Matrix or tensor dimensions do not match.
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// Candidate density matrix failed validation.
    InvalidState(StateDefect),
    /// Scalar parameter outside its allowed range.
    ParamOutOfRange { name: &'static str, value: f64 },
    /// Permutation-invariant threshold requested for a state that is not
    /// invariant under subsystem exchange.
    NotPermutationInvariant { residual: f64 },
    /// Unrecognized label (bipartition, family, ...).
    BadLabel,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotHermitian { residual } => {
                write!(f, "input is not Hermitian (residual {residual:.3e})")
            }
            Error::NonConvergence { residual } => {
                write!(
                    f,
                    "Jacobi sweeps did not converge (off-diagonal residual {residual:.3e})"
                )
            }
            Error::BadSubsystem { index } => {
                write!(f, "subsystem index {index} is not in 1..=3")
            }
            Error::BadDimension { d, min } => {
                write!(f, "local dimension {d} is below the minimum {min}")
            }
            Error::QubitsOnly { d } => {
                write!(f, "the pt-qubit criterion requires d = 2, got d = {d}")
            }
            Error::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::InvalidState(defect) => write!(f, "invalid state: {defect}"),
            Error::ParamOutOfRange { name, value } => {
                write!(f, "parameter {name}={value} is out of range")
            }
            Error::NotPermutationInvariant { residual } => write!(
                f,
                "state is not permutation invariant (swap residual {residual:.3e})"
            ),
            Error::BadLabel => write!(f, "unrecognized label"),
        }
    }
}

impl core::error::Error for Error {}

impl From<StateDefect> for Error {
    fn from(defect: StateDefect) -> Self {
        Error::InvalidState(defect)
    }
}
