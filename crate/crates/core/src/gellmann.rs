//! Generalized Gell-Mann generators of su(d).
//!
//! The d²−1 generators are ordered in three families, indices counted from 1:
//! diagonal (1 ..= d−1), symmetric off-diagonal (d ..= (d+2)(d−1)/2) and
//! antisymmetric off-diagonal (d(d+1)/2 ..= d²−1). Off-diagonal generators
//! enumerate the index pairs (j, k), j < k, in lexicographic order, the same
//! order in both families, so the symmetric and antisymmetric generators at
//! the same relative slot act on the same pair.
//!
//! The antisymmetric family is exactly the set of generators negated by
//! matrix transposition; everything else is transpose invariant. Partial
//! transposition therefore flips precisely the antisymmetric tensor
//! components, which is what the criteria build on.

use alloc::vec::Vec;
use core::ops::{Range, RangeInclusive};

// Inherent f64 math is std-only; no_std builds route through the trait.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::matrix::{Complex64, ComplexMatrix};

/// Ordered generalized Gell-Mann basis for one d-dimensional subsystem.
#[derive(Debug, Clone)]
pub struct GellMannBasis {
    d: usize,
    generators: Vec<ComplexMatrix>,
}

impl GellMannBasis {
    /// Build the d²−1 generators. Fails for d < 2.
    pub fn new(d: usize) -> Result<Self, Error> {
        if d < 2 {
            return Err(Error::BadDimension { d, min: 2 });
        }
        let mut generators = Vec::with_capacity(d * d - 1);

        // Diagonal family: √(2/((l+1)(l+2))) (Σ_{a≤l} |a⟩⟨a| − (l+1)|l+1⟩⟨l+1|).
        for l in 0..(d - 1) {
            let scale = (2.0 / ((l + 1) as f64 * (l + 2) as f64)).sqrt();
            let mut g = ComplexMatrix::zeros(d, d);
            for a in 0..=l {
                g[(a, a)] = Complex64::new(scale, 0.0);
            }
            g[(l + 1, l + 1)] = Complex64::new(-scale * (l + 1) as f64, 0.0);
            generators.push(g);
        }
        // Symmetric family: |j⟩⟨k| + |k⟩⟨j|.
        for j in 0..d {
            for k in (j + 1)..d {
                let mut g = ComplexMatrix::zeros(d, d);
                g[(j, k)] = Complex64::new(1.0, 0.0);
                g[(k, j)] = Complex64::new(1.0, 0.0);
                generators.push(g);
            }
        }
        // Antisymmetric family: −i(|j⟩⟨k| − |k⟩⟨j|).
        for j in 0..d {
            for k in (j + 1)..d {
                let mut g = ComplexMatrix::zeros(d, d);
                g[(j, k)] = Complex64::new(0.0, -1.0);
                g[(k, j)] = Complex64::new(0.0, 1.0);
                generators.push(g);
            }
        }
        Ok(Self { d, generators })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of generators, d²−1.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generators as a slice; slot s holds the generator with index s+1.
    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.generators
    }

    /// Generator by its index counted from 1.
    ///
    /// Panics when the index is outside 1 ..= d²−1.
    pub fn generator(&self, index: usize) -> &ComplexMatrix {
        assert!(
            (1..=self.generators.len()).contains(&index),
            "generator index {index} outside 1..={}",
            self.generators.len()
        );
        &self.generators[index - 1]
    }
}

/// Inclusive range of antisymmetric generator indices (counted from 1):
/// [d(d+1)/2, d²−1], of length d(d−1)/2.
pub fn antisym_range(d: usize) -> Result<RangeInclusive<usize>, Error> {
    if d < 2 {
        return Err(Error::BadDimension { d, min: 2 });
    }
    Ok(d * (d + 1) / 2..=d * d - 1)
}

/// Zero-based positions of the antisymmetric generators within
/// [`GellMannBasis::generators`].
pub fn antisym_slots(d: usize) -> Range<usize> {
    d * (d + 1) / 2 - 1..d * d - 1
}
