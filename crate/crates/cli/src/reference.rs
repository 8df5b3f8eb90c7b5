//! Published detection crossovers of other criteria on the benchmark
//! families, kept as constants for figure annotation. Nothing in this
//! workspace implements the criteria behind them; the values only mark where
//! other methods start detecting on the same noise axis.

/// Qubit GHZ + white noise, noise-weight axis.
pub const QUBIT_GHZ_ANNOTATIONS: &[(&str, f64)] = &[("concurrence-lower-bound", 0.08349)];

/// Qutrit GHZ + white noise, visibility axis.
pub const QUTRIT_GHZ_ANNOTATIONS: &[(&str, f64)] = &[
    ("chsh-overlap-bound", 0.731621),
    ("concurrence-lower-bound", 0.83485),
    ("correlation-tensor-bound", 0.89443),
];

/// Annotation set matching a scan, if one applies.
pub fn annotations_for(d: usize, qubit_criterion: bool) -> &'static [(&'static str, f64)] {
    match (d, qubit_criterion) {
        (2, true) => QUBIT_GHZ_ANNOTATIONS,
        (3, false) => QUTRIT_GHZ_ANNOTATIONS,
        _ => &[],
    }
}
