//! Detection of genuine tripartite entanglement for d×d×d quantum states.
//!
//! Two sufficient criteria are provided, each reporting a scalar value and a
//! threshold such that `value > threshold` certifies genuine multipartite
//! entanglement (GME):
//!
//! - **Partial-transpose criterion** ([`criteria::m_pt`], qubits only):
//!   the mean of the trace norms `‖ρ − ρ^{T_g}‖` taken over the three
//!   bipartitions, compared against √3.
//! - **Correlation-tensor criterion** ([`criteria::m1_ct`], `d ≥ 3`):
//!   the mean of the trace norms of three real matrices assembled from the
//!   Bloch correlation tensors of the state, compared against closed-form
//!   bounds that biseparable states cannot exceed.
//!
//! Failure to exceed a threshold is always reported as *inconclusive*: the
//! criteria are sufficient, never necessary.
//!
//! Supporting machinery lives in dedicated modules: dense complex linear
//! algebra with in-repo Jacobi eigen/SVD ([`matrix`], [`spectral`]), the
//! tripartite state type and partial transposition ([`state`]), generalized
//! Gell-Mann bases ([`gellmann`]), correlation-tensor decomposition
//! ([`bloch`]), benchmark state factories ([`states`]), and a sampling
//! auditor for the separability bounds ([`criteria::audit_bound`]).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `gme-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bloch;
pub mod criteria;
pub mod error;
pub mod gellmann;
pub mod matrix;
pub mod rng;
pub mod spectral;
pub mod state;
pub mod states;

pub use bloch::{decompose, reconstruct, tensor_norms, CorrelationTensors, TensorNorms};
pub use criteria::{
    audit_bound, bipartition_statistic, build_constructed, ct_thresholds, m1_ct, m_pt,
    pt_product_closed_form, pt_threshold, AuditRecord, AuditRow, AuditSampler, Bipartition,
    ConstructedMatrices, CriterionKind, CriterionReport, CtThresholds, ThresholdMode, Verdict,
};
pub use error::{Error, StateDefect};
pub use gellmann::{antisym_range, antisym_slots, GellMannBasis};
pub use matrix::{kron, kron_vec, Complex64, ComplexMatrix};
pub use rng::Prng;
pub use spectral::{hermitian_eigen, hermitian_eigenvalues, singular_values, trace_norm};
pub use state::{partial_transpose_matrix, TripartiteState};
pub use states::{
    ghz, maximally_mixed, mix, random_biseparable, random_pure, w_state, white_noise_mix,
    BisepKind, StateFamily, StateSpec,
};
