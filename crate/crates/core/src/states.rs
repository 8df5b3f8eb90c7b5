//! Factories for benchmark states and random-state sampling.
//!
//! Everything here is deterministic given (parameters, seed) and produces
//! states that pass [`TripartiteState`] validation.

use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

// Inherent f64 math is std-only; no_std builds route through the trait.
#[allow(unused_imports)]
use num_traits::Float;

use crate::criteria::Bipartition;
use crate::error::Error;
use crate::matrix::{kron_vec, vec_norm, Complex64, ComplexMatrix};
use crate::rng::Prng;
use crate::state::{flat_index, TripartiteState};

/// GHZ state (1/√d) Σ |iii⟩ as a density matrix.
pub fn ghz(d: usize) -> Result<TripartiteState, Error> {
    if d < 2 {
        return Err(Error::BadDimension { d, min: 2 });
    }
    let dim = d * d * d;
    let mut psi = vec![Complex64::new(0.0, 0.0); dim];
    for i in 0..d {
        psi[flat_index(i, i, i, d)] = Complex64::new(1.0, 0.0);
    }
    TripartiteState::from_pure(d, &psi)
}

/// W state (|001⟩ + |010⟩ + |100⟩)/√3 embedded in a d×d×d space.
///
/// Convenience family; the detection examples use GHZ.
pub fn w_state(d: usize) -> Result<TripartiteState, Error> {
    if d < 2 {
        return Err(Error::BadDimension { d, min: 2 });
    }
    let dim = d * d * d;
    let mut psi = vec![Complex64::new(0.0, 0.0); dim];
    psi[flat_index(0, 0, 1, d)] = Complex64::new(1.0, 0.0);
    psi[flat_index(0, 1, 0, d)] = Complex64::new(1.0, 0.0);
    psi[flat_index(1, 0, 0, d)] = Complex64::new(1.0, 0.0);
    TripartiteState::from_pure(d, &psi)
}

/// White noise I/d³.
pub fn maximally_mixed(d: usize) -> Result<TripartiteState, Error> {
    if d < 2 {
        return Err(Error::BadDimension { d, min: 2 });
    }
    let dim = d * d * d;
    TripartiteState::new(d, ComplexMatrix::identity(dim).scale(1.0 / dim as f64))
}

/// visibility·ρ + (1−visibility)·I/d³.
pub fn white_noise_mix(state: &TripartiteState, visibility: f64) -> Result<TripartiteState, Error> {
    if !(0.0..=1.0).contains(&visibility) {
        return Err(Error::ParamOutOfRange {
            name: "visibility",
            value: visibility,
        });
    }
    let dim = state.dim();
    let noise = (1.0 - visibility) / dim as f64;
    let mut rho = state.rho().scale(visibility);
    for i in 0..dim {
        rho[(i, i)] += Complex64::new(noise, 0.0);
    }
    TripartiteState::new(state.d(), rho)
}

/// Convex mixture Σ wᵢ ρᵢ of already validated states.
pub fn mix(weights: &[f64], states: &[TripartiteState]) -> Result<TripartiteState, Error> {
    if weights.len() != states.len() || states.is_empty() {
        return Err(Error::ShapeMismatch {
            expected: (states.len(), 1),
            found: (weights.len(), 1),
        });
    }
    let d = states[0].d();
    let dim = states[0].dim();
    let mut rho = ComplexMatrix::zeros(dim, dim);
    for (w, s) in weights.iter().zip(states) {
        if *w < 0.0 {
            return Err(Error::ParamOutOfRange {
                name: "mixture weight",
                value: *w,
            });
        }
        if s.d() != d {
            return Err(Error::ShapeMismatch {
                expected: (dim, dim),
                found: (s.dim(), s.dim()),
            });
        }
        rho = &rho + &s.rho().scale(*w);
    }
    TripartiteState::new(d, rho)
}

/// Normalized vector with independent standard-complex-Gaussian amplitudes
/// (Haar distributed) on (H_d)^⊗parties. Deterministic per seed.
pub fn random_pure(d: usize, parties: u32, seed: u64) -> Vec<Complex64> {
    let mut rng = Prng::new(seed);
    random_unit_vector(d.pow(parties), false, &mut rng)
}

/// Normalized Gaussian vector drawn from an existing generator;
/// `real_only` restricts amplitudes to the reals.
pub fn random_unit_vector(dim: usize, real_only: bool, rng: &mut Prng) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..dim)
        .map(|_| {
            if real_only {
                Complex64::new(rng.normal(), 0.0)
            } else {
                rng.complex()
            }
        })
        .collect();
    let norm = vec_norm(&v);
    for z in &mut v {
        *z /= norm;
    }
    v
}

/// Arrange |single⟩ ⊗ |pair⟩ into party order for the given bipartition.
///
/// The pair factor indexes its two parties in increasing party order.
pub fn embed_biseparable(
    bipartition: Bipartition,
    d: usize,
    single: &[Complex64],
    pair: &[Complex64],
) -> Vec<Complex64> {
    let mut psi = vec![Complex64::new(0.0, 0.0); d * d * d];
    for i1 in 0..d {
        for i2 in 0..d {
            for i3 in 0..d {
                let amp = match bipartition {
                    Bipartition::OneVs23 => single[i1] * pair[i2 * d + i3],
                    Bipartition::TwoVs13 => single[i2] * pair[i1 * d + i3],
                    Bipartition::ThreeVs12 => single[i3] * pair[i1 * d + i2],
                };
                psi[flat_index(i1, i2, i3, d)] = amp;
            }
        }
    }
    psi
}

/// Random biseparable pure state vector |φ_f⟩ ⊗ |φ_gh⟩ for one bipartition.
pub fn random_biseparable_pure(
    bipartition: Bipartition,
    d: usize,
    real_only: bool,
    rng: &mut Prng,
) -> Vec<Complex64> {
    let single = random_unit_vector(d, real_only, rng);
    let pair = random_unit_vector(d * d, real_only, rng);
    embed_biseparable(bipartition, d, &single, &pair)
}

/// Random fully product pure state |a⟩⊗|b⟩⊗|c⟩.
pub fn random_product_pure(d: usize, real_only: bool, rng: &mut Prng) -> Vec<Complex64> {
    let a = random_unit_vector(d, real_only, rng);
    let b = random_unit_vector(d, real_only, rng);
    let c = random_unit_vector(d, real_only, rng);
    kron_vec(&kron_vec(&a, &b), &c)
}

/// Which bipartitions a biseparable mixture draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BisepKind {
    /// Every term biseparable across the same bipartition.
    Fixed(Bipartition),
    /// Each term picks one of the three bipartitions at random.
    Mixed,
}

/// Convex mixture of random biseparable pure states with Dirichlet-uniform
/// weights. A deterministic negative instance for the criteria.
pub fn random_biseparable(
    kind: BisepKind,
    d: usize,
    seed: u64,
    mixture_terms: usize,
) -> Result<TripartiteState, Error> {
    if d < 2 {
        return Err(Error::BadDimension { d, min: 2 });
    }
    if mixture_terms == 0 {
        return Err(Error::ParamOutOfRange {
            name: "mixture_terms",
            value: 0.0,
        });
    }
    let mut rng = Prng::new(seed);
    // Dirichlet(1, ..., 1) weights via normalized exponentials.
    let mut weights: Vec<f64> = (0..mixture_terms)
        .map(|_| -(1.0 - rng.uniform()).ln())
        .collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }

    let dim = d * d * d;
    let mut rho = ComplexMatrix::zeros(dim, dim);
    for &w in &weights {
        let bipartition = match kind {
            BisepKind::Fixed(bp) => bp,
            BisepKind::Mixed => Bipartition::ALL[(rng.uniform() * 3.0) as usize % 3],
        };
        let psi = random_biseparable_pure(bipartition, d, false, &mut rng);
        for r in 0..dim {
            for c in 0..dim {
                rho[(r, c)] += psi[r] * psi[c].conj() * w;
            }
        }
    }
    TripartiteState::new(d, rho)
}

/// Convex mixture of `terms` random pure states; handy as a generic mixed
/// state with no particular measure attached.
pub fn random_mixed(d: usize, terms: usize, seed: u64) -> Result<TripartiteState, Error> {
    if d < 2 {
        return Err(Error::BadDimension { d, min: 2 });
    }
    if terms == 0 {
        return Err(Error::ParamOutOfRange {
            name: "terms",
            value: 0.0,
        });
    }
    let mut rng = Prng::new(seed);
    let dim = d * d * d;
    let mut weights: Vec<f64> = (0..terms).map(|_| -(1.0 - rng.uniform()).ln()).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut rho = ComplexMatrix::zeros(dim, dim);
    for &w in &weights {
        let psi = random_unit_vector(dim, false, &mut rng);
        for r in 0..dim {
            for c in 0..dim {
                rho[(r, c)] += psi[r] * psi[c].conj() * w;
            }
        }
    }
    TripartiteState::new(d, rho)
}

/// Named state families the CLI can generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateFamily {
    Ghz,
    W,
    Product,
    BisepMixture,
    RandomPure,
    /// White noise I/d³; constant in every sweep parameter.
    MaximallyMixed,
}

impl StateFamily {
    pub fn label(&self) -> &'static str {
        match self {
            StateFamily::Ghz => "ghz",
            StateFamily::W => "w",
            StateFamily::Product => "product",
            StateFamily::BisepMixture => "bisep-mixture",
            StateFamily::RandomPure => "random-pure",
            StateFamily::MaximallyMixed => "mixed",
        }
    }
}

impl FromStr for StateFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ghz" => Ok(StateFamily::Ghz),
            "w" => Ok(StateFamily::W),
            "product" => Ok(StateFamily::Product),
            "bisep-mixture" => Ok(StateFamily::BisepMixture),
            "random-pure" => Ok(StateFamily::RandomPure),
            "mixed" => Ok(StateFamily::MaximallyMixed),
            _ => Err(Error::BadLabel),
        }
    }
}

impl core::fmt::Display for StateFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

/// Terms used when the bisep-mixture family is generated from a spec.
pub const BISEP_MIXTURE_TERMS: usize = 8;

/// A generatable state: family, local dimension, white-noise visibility and
/// seed for the random families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateSpec {
    pub family: StateFamily,
    pub d: usize,
    pub visibility: f64,
    pub seed: u64,
}

impl StateSpec {
    /// Build the target state and mix it with white noise at the requested
    /// visibility (1.0 leaves it untouched).
    pub fn build(&self) -> Result<TripartiteState, Error> {
        let base = match self.family {
            StateFamily::Ghz => ghz(self.d)?,
            StateFamily::W => w_state(self.d)?,
            StateFamily::Product => {
                let mut rng = Prng::new(self.seed);
                let psi = random_product_pure(self.d, false, &mut rng);
                TripartiteState::from_pure(self.d, &psi)?
            }
            StateFamily::BisepMixture => {
                random_biseparable(BisepKind::Mixed, self.d, self.seed, BISEP_MIXTURE_TERMS)?
            }
            StateFamily::RandomPure => {
                TripartiteState::from_pure(self.d, &random_pure(self.d, 3, self.seed))?
            }
            StateFamily::MaximallyMixed => maximally_mixed(self.d)?,
        };
        if self.visibility == 1.0 {
            Ok(base)
        } else {
            white_noise_mix(&base, self.visibility)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bloch::{decompose, tensor_norms};

    #[test]
    fn ghz_qubit_entries() {
        let state = ghz(2).unwrap();
        let rho = state.rho();
        for r in 0..8 {
            for c in 0..8 {
                let expected = if (r == 0 || r == 7) && (c == 0 || c == 7) {
                    0.5
                } else {
                    0.0
                };
                assert!((rho[(r, c)] - Complex64::new(expected, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn ghz_qutrit_entries_and_purity() {
        let state = ghz(3).unwrap();
        assert!((state.rho().trace().re - 1.0).abs() < 1e-12);
        assert!((state.purity() - 1.0).abs() < 1e-12);
        let third = 1.0 / 3.0;
        for i in [0usize, 13, 26] {
            for j in [0usize, 13, 26] {
                assert!((state.rho()[(i, j)].re - third).abs() < 1e-12);
            }
        }
        let off = state.rho()[(1, 1)].norm();
        assert!(off < 1e-15);
    }

    #[test]
    fn ghz_is_permutation_invariant() {
        for d in [2, 3] {
            assert!(ghz(d).unwrap().permutation_residual() < 1e-10);
        }
    }

    #[test]
    fn w_state_is_valid_and_permutation_invariant() {
        for d in [2, 3] {
            let w = w_state(d).unwrap();
            assert!((w.purity() - 1.0).abs() < 1e-12);
            assert!(w.is_permutation_invariant());
        }
    }

    #[test]
    fn white_noise_mix_endpoints() {
        let pure = ghz(2).unwrap();
        let at_one = white_noise_mix(&pure, 1.0).unwrap();
        assert!(pure.rho().max_abs_diff(at_one.rho()) < 1e-15);

        let at_zero = white_noise_mix(&pure, 0.0).unwrap();
        let mixed = maximally_mixed(2).unwrap();
        assert!(at_zero.rho().max_abs_diff(mixed.rho()) < 1e-15);

        assert!(white_noise_mix(&pure, 1.2).is_err());
        assert!(white_noise_mix(&pure, -0.1).is_err());
    }

    #[test]
    fn white_noise_mix_is_affine_in_visibility() {
        let pure = ghz(3).unwrap();
        let full = tensor_norms(&decompose(&pure));
        for v in [0.25, 0.5, 0.75] {
            let mixed = white_noise_mix(&pure, v).unwrap();
            let norms = tensor_norms(&decompose(&mixed));
            assert!((norms.t12 - v * full.t12).abs() < 1e-10);
            assert!((norms.t123 - v * full.t123).abs() < 1e-10);
        }
    }

    #[test]
    fn random_pure_is_normalized_and_deterministic() {
        let a = random_pure(2, 3, 77);
        let b = random_pure(2, 3, 77);
        assert_eq!(a.len(), 8);
        assert!((vec_norm(&a) - 1.0).abs() < 1e-12);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
        let c = random_pure(2, 3, 78);
        assert!(a.iter().zip(&c).any(|(x, y)| x != y));
    }

    #[test]
    fn haar_average_reduction_purity() {
        // Mean purity of the single-party reduction of a two-qutrit Haar
        // state is (d + d)/(d² + 1) = 0.6 at d = 3.
        let d = 3;
        let mut rng = Prng::new(1234);
        let mut total = 0.0;
        let samples = 1000;
        for _ in 0..samples {
            let psi = random_unit_vector(d * d, false, &mut rng);
            let mut purity = 0.0;
            for i in 0..d {
                for j in 0..d {
                    let mut entry = Complex64::new(0.0, 0.0);
                    for k in 0..d {
                        entry += psi[i * d + k] * psi[j * d + k].conj();
                    }
                    purity += entry.norm_sqr();
                }
            }
            total += purity;
        }
        let mean = total / samples as f64;
        assert!((mean - 0.6).abs() < 0.02, "mean purity {mean}");
    }

    #[test]
    fn random_biseparable_is_valid_over_many_seeds() {
        for seed in 0..1000 {
            let state = random_biseparable(BisepKind::Mixed, 2, seed, 3).unwrap();
            assert!((state.rho().trace().re - 1.0).abs() < 1e-12);
        }
        for seed in 0..100 {
            let bp = Bipartition::ALL[seed as usize % 3];
            random_biseparable(BisepKind::Fixed(bp), 3, seed, 2).unwrap();
        }
    }

    #[test]
    fn random_biseparable_rejects_bad_parameters() {
        assert!(random_biseparable(BisepKind::Mixed, 1, 0, 2).is_err());
        assert!(random_biseparable(BisepKind::Mixed, 2, 0, 0).is_err());
    }

    #[test]
    fn state_spec_builds_every_family() {
        for family in [
            StateFamily::Ghz,
            StateFamily::W,
            StateFamily::Product,
            StateFamily::BisepMixture,
            StateFamily::RandomPure,
            StateFamily::MaximallyMixed,
        ] {
            let spec = StateSpec {
                family,
                d: 2,
                visibility: 0.7,
                seed: 5,
            };
            let state = spec.build().unwrap();
            assert_eq!(state.d(), 2);
        }
        assert_eq!(
            "bisep-mixture".parse::<StateFamily>().unwrap(),
            StateFamily::BisepMixture
        );
        assert!("nope".parse::<StateFamily>().is_err());
    }

    #[test]
    fn mix_builds_convex_combinations() {
        let a = ghz(2).unwrap();
        let b = maximally_mixed(2).unwrap();
        let m = mix(&[0.25, 0.75], &[a.clone(), b]).unwrap();
        assert!((m.rho()[(0, 7)].re - 0.125).abs() < 1e-15);
        assert!(mix(&[0.5, 0.5], &[a]).is_err());
    }
}
