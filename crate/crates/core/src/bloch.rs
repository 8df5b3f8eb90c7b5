//! Correlation-tensor (Bloch) decomposition of tripartite states.
//!
//! A state expands over the operator basis {I, λ₁, …, λ_{d²−1}} per
//! subsystem as
//!
//! ```text
//! ρ = (1/d³) I⊗I⊗I
//!   + (1/2d²) Σ tᵃ λ_a-pattern (one-body, three patterns)
//!   + (1/4d)  Σ tᵃᵇ two-body patterns
//!   + (1/8)   Σ tᵃᵇᶜ λ_a⊗λ_b⊗λ_c,
//! ```
//!
//! with every coefficient a trace pairing, t = tr(ρ · pattern). The
//! prefactors are the unique ones consistent with tr(λ_aλ_b) = 2δ_ab, and
//! collapse to the familiar all-1/8 form at d = 2. [`decompose`] and
//! [`reconstruct`] are exact inverses up to roundoff.
//!
//! Both directions run as three staged index contractions instead of
//! assembling d³×d³ Kronecker products per coefficient, which keeps a full
//! decomposition at a few times 10⁴ flops for d = 3.

use alloc::vec;
use alloc::vec::Vec;

// Inherent f64 math is std-only; no_std builds route through the trait.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::gellmann::GellMannBasis;
use crate::matrix::{Complex64, ComplexMatrix};
use crate::state::TripartiteState;

/// All seven correlation tensors of a tripartite state.
///
/// Vectors have length n = d²−1 (slot s ↔ generator index s+1), matrices are
/// n×n row-major, and the three-body cube is flattened with the party-2 index
/// major over party 3: `t123[(a·n + b)·n + c]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationTensors {
    d: usize,
    t1: Vec<f64>,
    t2: Vec<f64>,
    t3: Vec<f64>,
    t12: Vec<f64>,
    t13: Vec<f64>,
    t23: Vec<f64>,
    t123: Vec<f64>,
}

impl CorrelationTensors {
    /// All-zero tensors (the maximally mixed state).
    pub fn zeros(d: usize) -> Result<Self, Error> {
        if d < 2 {
            return Err(Error::BadDimension { d, min: 2 });
        }
        let n = d * d - 1;
        Ok(Self {
            d,
            t1: vec![0.0; n],
            t2: vec![0.0; n],
            t3: vec![0.0; n],
            t12: vec![0.0; n * n],
            t13: vec![0.0; n * n],
            t23: vec![0.0; n * n],
            t123: vec![0.0; n * n * n],
        })
    }

    /// Assemble from raw parts, validating every length against d.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        d: usize,
        t1: Vec<f64>,
        t2: Vec<f64>,
        t3: Vec<f64>,
        t12: Vec<f64>,
        t13: Vec<f64>,
        t23: Vec<f64>,
        t123: Vec<f64>,
    ) -> Result<Self, Error> {
        if d < 2 {
            return Err(Error::BadDimension { d, min: 2 });
        }
        let n = d * d - 1;
        for (len, expected) in [
            (t1.len(), n),
            (t2.len(), n),
            (t3.len(), n),
            (t12.len(), n * n),
            (t13.len(), n * n),
            (t23.len(), n * n),
            (t123.len(), n * n * n),
        ] {
            if len != expected {
                return Err(Error::ShapeMismatch {
                    expected: (expected, 1),
                    found: (len, 1),
                });
            }
        }
        Ok(Self {
            d,
            t1,
            t2,
            t3,
            t12,
            t13,
            t23,
            t123,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Generators per subsystem, d²−1.
    pub fn n(&self) -> usize {
        self.d * self.d - 1
    }

    pub fn t1(&self) -> &[f64] {
        &self.t1
    }

    pub fn t2(&self) -> &[f64] {
        &self.t2
    }

    pub fn t3(&self) -> &[f64] {
        &self.t3
    }

    pub fn t12(&self) -> &[f64] {
        &self.t12
    }

    pub fn t13(&self) -> &[f64] {
        &self.t13
    }

    pub fn t23(&self) -> &[f64] {
        &self.t23
    }

    pub fn t123(&self) -> &[f64] {
        &self.t123
    }

    /// Row-major index into the two-body tensors (0-based slots).
    pub fn idx2(&self, a: usize, b: usize) -> usize {
        a * self.n() + b
    }

    /// Flat index into the three-body cube (0-based slots).
    pub fn idx3(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.n() + b) * self.n() + c
    }
}

fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Operator list {I, λ₁, …} flattened for trace pairing:
/// entry (i·d + j) holds op[(j, i)].
fn dual_flattened(basis: &GellMannBasis) -> Vec<Vec<Complex64>> {
    let d = basis.d();
    let mut out = Vec::with_capacity(basis.len() + 1);
    let id = ComplexMatrix::identity(d);
    for op in core::iter::once(&id).chain(basis.generators().iter()) {
        let mut flat = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                flat.push(op[(j, i)]);
            }
        }
        out.push(flat);
    }
    out
}

/// Compute all seven correlation tensors of a state.
pub fn decompose(state: &TripartiteState) -> CorrelationTensors {
    let d = state.d();
    let n = d * d - 1;
    let m = n + 1;
    let d2 = d * d;
    let d4 = d2 * d2;
    let basis = GellMannBasis::new(d).expect("validated state has d >= 2");
    let dual = dual_flattened(&basis);
    let rho = state.rho();

    // Stage 1: contract party 1. s1[a][(i2 j2 i3 j3)].
    let mut s1 = vec![czero(); m * d4];
    for (a, op) in dual.iter().enumerate() {
        for i2 in 0..d {
            for j2 in 0..d {
                for i3 in 0..d {
                    for j3 in 0..d {
                        let mut acc = czero();
                        for i1 in 0..d {
                            for j1 in 0..d {
                                acc += op[i1 * d + j1]
                                    * rho[(i1 * d2 + i2 * d + i3, j1 * d2 + j2 * d + j3)];
                            }
                        }
                        s1[a * d4 + ((i2 * d + j2) * d + i3) * d + j3] = acc;
                    }
                }
            }
        }
    }

    // Stage 2: contract party 2. s2[a][b][(i3 j3)].
    let mut s2 = vec![czero(); m * m * d2];
    for a in 0..m {
        for (b, op) in dual.iter().enumerate() {
            for i3 in 0..d {
                for j3 in 0..d {
                    let mut acc = czero();
                    for i2 in 0..d {
                        for j2 in 0..d {
                            acc += op[i2 * d + j2] * s1[a * d4 + ((i2 * d + j2) * d + i3) * d + j3];
                        }
                    }
                    s2[(a * m + b) * d2 + i3 * d + j3] = acc;
                }
            }
        }
    }

    // Stage 3: contract party 3. w[a][b][c] = tr(ρ · op_a⊗op_b⊗op_c).
    let mut w = vec![czero(); m * m * m];
    for a in 0..m {
        for b in 0..m {
            for (c, op) in dual.iter().enumerate() {
                let mut acc = czero();
                for i3 in 0..d {
                    for j3 in 0..d {
                        acc += op[i3 * d + j3] * s2[(a * m + b) * d2 + i3 * d + j3];
                    }
                }
                w[(a * m + b) * m + c] = acc;
            }
        }
    }

    let at = |a: usize, b: usize, c: usize| w[(a * m + b) * m + c].re;
    let mut t = CorrelationTensors::zeros(d).expect("d >= 2");
    for a in 1..m {
        t.t1[a - 1] = at(a, 0, 0);
        t.t2[a - 1] = at(0, a, 0);
        t.t3[a - 1] = at(0, 0, a);
    }
    for a in 1..m {
        for b in 1..m {
            t.t12[(a - 1) * n + (b - 1)] = at(a, b, 0);
            t.t13[(a - 1) * n + (b - 1)] = at(a, 0, b);
            t.t23[(a - 1) * n + (b - 1)] = at(0, a, b);
        }
    }
    for a in 1..m {
        for b in 1..m {
            for c in 1..m {
                t.t123[((a - 1) * n + (b - 1)) * n + (c - 1)] = at(a, b, c);
            }
        }
    }
    t
}

/// Rebuild the density matrix from correlation tensors.
pub fn reconstruct(t: &CorrelationTensors) -> Result<TripartiteState, Error> {
    let d = t.d();
    let n = t.n();
    let m = n + 1;
    let d2 = d * d;
    let basis = GellMannBasis::new(d)?;

    // Scaled operators: identity carries 1/d, generators carry 1/2, so that
    // the product of three per-axis factors reproduces the expansion
    // prefactors 1/d³, 1/2d², 1/4d, 1/8.
    let id = ComplexMatrix::identity(d);
    let mut scaled: Vec<Vec<Complex64>> = Vec::with_capacity(m);
    for (slot, op) in core::iter::once(&id)
        .chain(basis.generators().iter())
        .enumerate()
    {
        let f = if slot == 0 { 1.0 / d as f64 } else { 0.5 };
        let mut flat = Vec::with_capacity(d2);
        for i in 0..d {
            for j in 0..d {
                flat.push(op[(i, j)] * f);
            }
        }
        scaled.push(flat);
    }

    // Full coefficient cube including the identity slots.
    let mut w = vec![0.0f64; m * m * m];
    let idx = |a: usize, b: usize, c: usize| (a * m + b) * m + c;
    w[idx(0, 0, 0)] = 1.0;
    for a in 1..m {
        w[idx(a, 0, 0)] = t.t1[a - 1];
        w[idx(0, a, 0)] = t.t2[a - 1];
        w[idx(0, 0, a)] = t.t3[a - 1];
    }
    for a in 1..m {
        for b in 1..m {
            w[idx(a, b, 0)] = t.t12[(a - 1) * n + (b - 1)];
            w[idx(a, 0, b)] = t.t13[(a - 1) * n + (b - 1)];
            w[idx(0, a, b)] = t.t23[(a - 1) * n + (b - 1)];
        }
    }
    for a in 1..m {
        for b in 1..m {
            for c in 1..m {
                w[idx(a, b, c)] = t.t123[((a - 1) * n + (b - 1)) * n + (c - 1)];
            }
        }
    }

    // Stage 1: r1[(i1 j1)][b][c] = Σ_a w[a b c] g_a[(i1 j1)].
    let mut r1 = vec![czero(); d2 * m * m];
    for p in 0..d2 {
        for b in 0..m {
            for c in 0..m {
                let mut acc = czero();
                for (a, op) in scaled.iter().enumerate() {
                    acc += op[p] * w[idx(a, b, c)];
                }
                r1[(p * m + b) * m + c] = acc;
            }
        }
    }
    // Stage 2: r2[(i1 j1)][(i2 j2)][c].
    let mut r2 = vec![czero(); d2 * d2 * m];
    for p in 0..d2 {
        for q in 0..d2 {
            for c in 0..m {
                let mut acc = czero();
                for (b, op) in scaled.iter().enumerate() {
                    acc += op[q] * r1[(p * m + b) * m + c];
                }
                r2[(p * d2 + q) * m + c] = acc;
            }
        }
    }
    // Stage 3: assemble ρ.
    let dim = d * d2;
    let mut rho = ComplexMatrix::zeros(dim, dim);
    for i1 in 0..d {
        for j1 in 0..d {
            let p = i1 * d + j1;
            for i2 in 0..d {
                for j2 in 0..d {
                    let q = i2 * d + j2;
                    for i3 in 0..d {
                        for j3 in 0..d {
                            let mut acc = czero();
                            for (c, op) in scaled.iter().enumerate() {
                                acc += op[i3 * d + j3] * r2[(p * d2 + q) * m + c];
                            }
                            rho[(i1 * d2 + i2 * d + i3, j1 * d2 + j2 * d + j3)] = acc;
                        }
                    }
                }
            }
        }
    }
    TripartiteState::new(d, rho)
}

/// Frobenius norms of the seven tensors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TensorNorms {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub t12: f64,
    pub t13: f64,
    pub t23: f64,
    pub t123: f64,
}

/// Frobenius norm of every tensor.
pub fn tensor_norms(t: &CorrelationTensors) -> TensorNorms {
    fn norm(v: &[f64]) -> f64 {
        v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
    TensorNorms {
        t1: norm(&t.t1),
        t2: norm(&t.t2),
        t3: norm(&t.t3),
        t12: norm(&t.t12),
        t13: norm(&t.t13),
        t23: norm(&t.t23),
        t123: norm(&t.t123),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{kron, kron_vec, outer_self};
    use crate::rng::Prng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn maximally_mixed(d: usize) -> TripartiteState {
        let dim = d * d * d;
        TripartiteState::new(d, ComplexMatrix::identity(dim).scale(1.0 / dim as f64)).unwrap()
    }

    fn ghz(d: usize) -> TripartiteState {
        let dim = d * d * d;
        let mut psi = vec![czero(); dim];
        for i in 0..d {
            psi[i * d * d + i * d + i] = c(1.0, 0.0);
        }
        TripartiteState::from_pure(d, &psi).unwrap()
    }

    fn random_vector(dim: usize, rng: &mut Prng) -> Vec<Complex64> {
        (0..dim).map(|_| rng.complex()).collect()
    }

    fn random_state(d: usize, seed: u64) -> TripartiteState {
        let mut rng = Prng::new(seed);
        let dim = d * d * d;
        let mut rho = ComplexMatrix::zeros(dim, dim);
        for _ in 0..3 {
            let psi = random_vector(dim, &mut rng);
            let n2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
            for r in 0..dim {
                for q in 0..dim {
                    rho[(r, q)] += psi[r] * psi[q].conj() / (3.0 * n2);
                }
            }
        }
        TripartiteState::new(d, rho).unwrap()
    }

    /// Independent oracle: tr(ρ · A⊗B⊗C) with the Kronecker product built
    /// explicitly. 0 stands for the identity.
    fn trace_pairing(state: &TripartiteState, slots: (usize, usize, usize)) -> Complex64 {
        let d = state.d();
        let basis = GellMannBasis::new(d).unwrap();
        let pick = |s: usize| {
            if s == 0 {
                ComplexMatrix::identity(d)
            } else {
                basis.generator(s).clone()
            }
        };
        let op = kron(&kron(&pick(slots.0), &pick(slots.1)), &pick(slots.2));
        (&(state.rho().clone()) * &op).trace()
    }

    #[test]
    fn maximally_mixed_has_zero_tensors() {
        for d in [2, 3] {
            let t = decompose(&maximally_mixed(d));
            let norms = tensor_norms(&t);
            for v in [
                norms.t1, norms.t2, norms.t3, norms.t12, norms.t13, norms.t23, norms.t123,
            ] {
                assert!(v < 1e-14, "d={d}: {v}");
            }
        }
    }

    #[test]
    fn ghz_qubit_known_entries() {
        let t = decompose(&ghz(2));
        // generator 1 is σ_z, 2 is σ_x (0-based slots 0 and 1)
        assert!((t.t12()[t.idx2(0, 0)] - 1.0).abs() < 1e-12, "σz⊗σz");
        assert!((t.t123()[t.idx3(1, 1, 1)] - 1.0).abs() < 1e-12, "σx⊗σx⊗σx");
        assert!(t.t123()[t.idx3(0, 0, 0)].abs() < 1e-12, "σz⊗σz⊗σz");
    }

    #[test]
    fn entries_match_direct_trace_pairings() {
        let state = random_state(2, 301);
        let t = decompose(&state);
        let n = t.n();
        for a in 0..n {
            let direct = trace_pairing(&state, (a + 1, 0, 0));
            assert!((direct.re - t.t1()[a]).abs() < 1e-10);
            assert!(direct.im.abs() < 1e-12);
            for b in 0..n {
                let direct = trace_pairing(&state, (a + 1, b + 1, 0));
                assert!((direct.re - t.t12()[t.idx2(a, b)]).abs() < 1e-10);
                assert!(direct.im.abs() < 1e-12);
                for cc in 0..n {
                    let direct = trace_pairing(&state, (a + 1, b + 1, cc + 1));
                    assert!((direct.re - t.t123()[t.idx3(a, b, cc)]).abs() < 1e-10);
                    assert!(direct.im.abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn roundtrip_identity_d2_and_d3() {
        for (d, seed) in [(2, 310), (3, 311)] {
            let state = random_state(d, seed);
            let rebuilt = reconstruct(&decompose(&state)).unwrap();
            let residual = (state.rho() - rebuilt.rho()).frobenius_norm();
            assert!(residual < 1e-10, "d={d}: residual {residual}");
        }
    }

    #[test]
    fn zero_tensors_reconstruct_to_maximally_mixed() {
        for d in [2, 3] {
            let state = reconstruct(&CorrelationTensors::zeros(d).unwrap()).unwrap();
            let dim = d * d * d;
            let expected = ComplexMatrix::identity(dim).scale(1.0 / dim as f64);
            assert!(state.rho().max_abs_diff(&expected) < 1e-15);
        }
    }

    #[test]
    fn product_state_tensors_factorize() {
        let mut rng = Prng::new(320);
        let one = random_vector(2, &mut rng);
        let pair = random_vector(4, &mut rng);
        let psi = kron_vec(&one, &pair);
        let state = TripartiteState::from_pure(2, &psi).unwrap();
        let t = decompose(&state);
        let n = t.n();
        for a in 0..n {
            for b in 0..n {
                let expected = t.t1()[a] * t.t2()[b];
                assert!((t.t12()[t.idx2(a, b)] - expected).abs() < 1e-10);
                for cc in 0..n {
                    let expected = t.t1()[a] * t.t23()[t.idx2(b, cc)];
                    assert!((t.t123()[t.idx3(a, b, cc)] - expected).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn pure_two_qubit_purity_relation() {
        // Embed a pure pair state behind a fixed first party; T2, T3, T23
        // are then the pair's own tensors and must satisfy
        // ‖T2‖² + ‖T3‖² + ‖T23‖² = 3.
        let mut rng = Prng::new(321);
        for _ in 0..20 {
            let mut one = vec![czero(); 2];
            one[0] = c(1.0, 0.0);
            let pair = random_vector(4, &mut rng);
            let state = TripartiteState::from_pure(2, &kron_vec(&one, &pair)).unwrap();
            let norms = tensor_norms(&decompose(&state));
            let total = norms.t2 * norms.t2 + norms.t3 * norms.t3 + norms.t23 * norms.t23;
            assert!((total - 3.0).abs() < 1e-9, "{total}");
        }
    }

    #[test]
    fn pure_qubit_bloch_vectors_are_unit_or_less() {
        let mut rng = Prng::new(322);
        for _ in 0..20 {
            let psi = random_vector(8, &mut rng);
            let state = TripartiteState::from_pure(2, &psi).unwrap();
            let norms = tensor_norms(&decompose(&state));
            for v in [norms.t1, norms.t2, norms.t3] {
                assert!(v <= 1.0 + 1e-9, "{v}");
            }
        }
        // product case: single-party Bloch vector is exactly unit
        let one = random_vector(2, &mut rng);
        let pair = random_vector(4, &mut rng);
        let state = TripartiteState::from_pure(2, &kron_vec(&one, &pair)).unwrap();
        let norms = tensor_norms(&decompose(&state));
        assert!((norms.t1 - 1.0).abs() < 1e-10, "{}", norms.t1);
    }

    #[test]
    fn ghz_three_body_norm_matches_elementwise_recomputation() {
        let state = ghz(2);
        let t = decompose(&state);
        let n = t.n();
        let mut total = 0.0;
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    let direct = trace_pairing(&state, (a + 1, b + 1, cc + 1)).re;
                    total += direct * direct;
                }
            }
        }
        let norms = tensor_norms(&t);
        assert!((norms.t123 * norms.t123 - total).abs() < 1e-10);
    }

    #[test]
    fn tensor_norm_bounds_hold_for_valid_states() {
        for (d, seed) in [(2usize, 330u64), (3, 331)] {
            let state = random_state(d, seed);
            let t = decompose(&state);
            let norms = tensor_norms(&t);
            let one_body = 2.0 * (d as f64 - 1.0) / d as f64;
            let two_body = 4.0 * ((d * d) as f64 - 1.0) / (d * d) as f64;
            for v in [norms.t1, norms.t2, norms.t3] {
                assert!(v * v <= one_body + 1e-9);
            }
            for v in [norms.t12, norms.t13, norms.t23] {
                assert!(v * v <= two_body + 1e-9);
            }
        }
    }

    #[test]
    fn from_parts_validates_lengths() {
        let err = CorrelationTensors::from_parts(
            2,
            vec![0.0; 3],
            vec![0.0; 3],
            vec![0.0; 2], // wrong
            vec![0.0; 9],
            vec![0.0; 9],
            vec![0.0; 9],
            vec![0.0; 27],
        );
        assert!(matches!(err, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn outer_self_matches_from_pure() {
        let mut rng = Prng::new(340);
        let psi = random_vector(8, &mut rng);
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        let direct = outer_self(&psi).scale(1.0 / norm2);
        let state = TripartiteState::from_pure(2, &psi).unwrap();
        assert!(state.rho().max_abs_diff(&direct) < 1e-12);
    }
}
