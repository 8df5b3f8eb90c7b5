//! On-disk state format: one JSON document with fields `d`, `parties`, `re`,
//! `im`, the latter two as nested d³×d³ row-major arrays.
//!
//! Floats are written in scientific notation with 17 significant digits, so
//! a state written and re-read is bit-identical in every entry. Parsing
//! validates the document against the full density-matrix contract and names
//! the failed invariant in the error.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use gme_core::{Complex64, ComplexMatrix, TripartiteState};
use serde::Deserialize;
use thiserror::Error;

/// Largest local dimension the tool accepts from a file.
pub const MAX_LOCAL_DIMENSION: usize = 8;

#[derive(Debug, Error)]
pub enum FileError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("not a valid state document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("parties must be 3, found {0}")]
    WrongParties(usize),
    #[error("local dimension {0} outside the supported range 2..={MAX_LOCAL_DIMENSION}")]
    UnsupportedDimension(usize),
    #[error(
        "field {field} must be a {expected}x{expected} array, found {rows} rows x {cols} columns"
    )]
    WrongShape {
        field: &'static str,
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("{0}")]
    InvalidState(gme_core::Error),
}

#[derive(Deserialize)]
struct StateDoc {
    d: usize,
    parties: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

fn push_f64(out: &mut String, x: f64) {
    // 17 significant digits: enough to reproduce any f64 exactly on parse.
    let _ = write!(out, "{x:.16e}");
}

/// Serialize a state to the document format.
pub fn state_to_string(state: &TripartiteState) -> String {
    let dim = state.dim();
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"d\": {},", state.d());
    out.push_str("  \"parties\": 3,\n");
    for (field, pick) in [
        ("re", (|z: Complex64| z.re) as fn(Complex64) -> f64),
        ("im", |z: Complex64| z.im),
    ] {
        let _ = writeln!(out, "  \"{field}\": [");
        for r in 0..dim {
            out.push_str("    [");
            for c in 0..dim {
                if c > 0 {
                    out.push_str(", ");
                }
                push_f64(&mut out, pick(state.rho()[(r, c)]));
            }
            out.push(']');
            out.push_str(if r + 1 < dim { ",\n" } else { "\n" });
        }
        out.push_str(if field == "re" { "  ],\n" } else { "  ]\n" });
    }
    out.push_str("}\n");
    out
}

fn check_shape(field: &'static str, rows: &[Vec<f64>], expected: usize) -> Result<(), FileError> {
    let bad_cols = rows.iter().map(Vec::len).find(|&len| len != expected);
    if rows.len() != expected || bad_cols.is_some() {
        return Err(FileError::WrongShape {
            field,
            expected,
            rows: rows.len(),
            cols: bad_cols.unwrap_or_else(|| rows.first().map_or(0, Vec::len)),
        });
    }
    Ok(())
}

/// Parse and validate a state document.
pub fn state_from_str(text: &str) -> Result<TripartiteState, FileError> {
    let doc: StateDoc = serde_json::from_str(text)?;
    if doc.parties != 3 {
        return Err(FileError::WrongParties(doc.parties));
    }
    if !(2..=MAX_LOCAL_DIMENSION).contains(&doc.d) {
        return Err(FileError::UnsupportedDimension(doc.d));
    }
    let dim = doc.d * doc.d * doc.d;
    check_shape("re", &doc.re, dim)?;
    check_shape("im", &doc.im, dim)?;
    let rho = ComplexMatrix::from_fn(dim, dim, |r, c| Complex64::new(doc.re[r][c], doc.im[r][c]));
    TripartiteState::new(doc.d, rho).map_err(FileError::InvalidState)
}

/// Read a state document from disk.
pub fn read_state(path: &Path) -> Result<TripartiteState, FileError> {
    state_from_str(&fs::read_to_string(path)?)
}

/// Write a state document to disk.
pub fn write_state(path: &Path, state: &TripartiteState) -> Result<(), FileError> {
    Ok(fs::write(path, state_to_string(state))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gme_core::states;

    #[test]
    fn roundtrip_is_bit_identical() {
        let state = states::random_mixed(2, 3, 99).unwrap();
        let text = state_to_string(&state);
        let back = state_from_str(&text).unwrap();
        assert_eq!(back.d(), 2);
        for (a, b) in state.rho().data().iter().zip(back.rho().data()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn rejects_with_named_invariant() {
        let state = states::maximally_mixed(2).unwrap();
        let mut text = state_to_string(&state);
        // corrupt one diagonal entry: trace moves away from 1
        text = text.replacen("1.2500000000000000e-1", "2.2500000000000000e-1", 1);
        let err = state_from_str(&text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("trace"), "unexpected message: {msg}");
    }

    #[test]
    fn rejects_wrong_parties_and_shape() {
        let text = r#"{"d": 2, "parties": 2, "re": [], "im": []}"#;
        assert!(matches!(
            state_from_str(text),
            Err(FileError::WrongParties(2))
        ));

        let text = r#"{"d": 2, "parties": 3, "re": [[0.0]], "im": [[0.0]]}"#;
        assert!(matches!(
            state_from_str(text),
            Err(FileError::WrongShape { .. })
        ));

        let text = r#"{"d": 77, "parties": 3, "re": [], "im": []}"#;
        assert!(matches!(
            state_from_str(text),
            Err(FileError::UnsupportedDimension(77))
        ));
    }
}
