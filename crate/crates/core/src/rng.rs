//! Seeded random number generation.
//!
//! All sampling in the crate goes through [`Prng`], a counter-based stream
//! cipher generator with explicit 64-bit seeding. The only contract callers
//! rely on is bit-for-bit reproducibility per seed.

// Inherent f64 math is std-only; no_std builds route through the trait.
#[allow(unused_imports)]
use num_traits::Float;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::matrix::Complex64;

/// Deterministic pseudo-random generator.
#[derive(Debug, Clone)]
pub struct Prng {
    inner: ChaCha8Rng,
    spare_normal: Option<f64>,
}

impl Prng {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed),
            spare_normal: None,
        }
    }

    /// Uniform in [0, 1), 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box-Muller, second deviate cached.
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        // 1 - uniform() lies in (0, 1], keeping the log finite.
        let r = (-2.0 * (1.0 - self.uniform()).ln()).sqrt();
        let theta = 2.0 * core::f64::consts::PI * self.uniform();
        self.spare_normal = Some(r * theta.sin());
        r * theta.cos()
    }

    /// Standard complex Gaussian (independent N(0,1) real and imaginary parts).
    pub fn complex(&mut self) -> Complex64 {
        Complex64::new(self.normal(), self.normal())
    }
}
