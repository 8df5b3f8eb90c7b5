//! IO, file formats and sweep plumbing behind the `gme` command-line tool.
//!
//! The numerical work lives in `gme-core`; this crate adds the on-disk state
//! format ([`matrixfile`]), grid scans with crossover bisection ([`sweep`]),
//! resolution of `--state` arguments ([`family`]), output rendering in text,
//! CSV and JSON ([`render`]) and published reference constants for figure
//! annotation ([`reference`](mod@reference)).

pub mod family;
pub mod matrixfile;
pub mod reference;
pub mod render;
pub mod sweep;
