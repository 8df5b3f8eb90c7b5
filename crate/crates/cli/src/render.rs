//! Rendering of reports, sweeps and audit records as text, CSV or JSON.
//!
//! CSV uses '.' decimals, comma separators, a header row and a fixed column
//! order, so the emitted files plot without preprocessing. Floats print in
//! Rust's shortest round-trip form.

use std::fmt::Write as _;
use std::str::FromStr;

use gme_core::{AuditRecord, Bipartition, CriterionReport};
use serde::Serialize;

pub use crate::sweep::{SweepPoint, SweepResult};

/// Output flavor selected by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Machine,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "machine" => Ok(OutputFormat::Machine),
            other => Err(format!(
                "unknown format '{other}', expected text, csv or machine"
            )),
        }
    }
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    criterion: &'a str,
    mode: Option<&'a str>,
    norms: NormsDoc,
    value: f64,
    threshold: f64,
    verdict: &'a str,
}

#[derive(Serialize)]
struct NormsDoc {
    #[serde(rename = "1|23")]
    one_vs_23: f64,
    #[serde(rename = "2|13")]
    two_vs_13: f64,
    #[serde(rename = "3|12")]
    three_vs_12: f64,
}

pub fn report_text(report: &CriterionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "criterion   {}", report.kind);
    if let Some(mode) = report.mode {
        let _ = writeln!(out, "mode        {mode}");
    }
    for (bp, norm) in Bipartition::ALL.iter().zip(report.norms) {
        let _ = writeln!(out, "norm[{bp}]  {norm}");
    }
    let _ = writeln!(out, "value       {}", report.value);
    let _ = writeln!(out, "threshold   {}", report.threshold);
    let _ = writeln!(out, "verdict     {}", report.verdict);
    out
}

pub fn report_csv(report: &CriterionReport) -> String {
    let mut out =
        String::from("criterion,mode,norm_1v23,norm_2v13,norm_3v12,value,threshold,verdict\n");
    let _ = writeln!(
        out,
        "{},{},{},{},{},{},{},{}",
        report.kind,
        report.mode.map_or("", |m| m.label()),
        report.norms[0],
        report.norms[1],
        report.norms[2],
        report.value,
        report.threshold,
        report.verdict,
    );
    out
}

pub fn report_json(report: &CriterionReport) -> String {
    let doc = ReportDoc {
        criterion: report.kind.label(),
        mode: report.mode.map(|m| m.label()),
        norms: NormsDoc {
            one_vs_23: report.norms[0],
            two_vs_13: report.norms[1],
            three_vs_12: report.norms[2],
        },
        value: report.value,
        threshold: report.threshold,
        verdict: report.verdict.label(),
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

pub fn sweep_text(result: &SweepResult) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>14}  {:>22}  {:>22}  verdict",
        result.parameter, "value", "threshold"
    );
    for p in &result.points {
        let _ = writeln!(
            out,
            "{:>14.6}  {:>22}  {:>22}  {}",
            p.parameter, p.value, p.threshold, p.verdict
        );
    }
    match result.crossover {
        Some(x) => {
            let _ = writeln!(out, "crossover at {} = {x}", result.parameter);
        }
        None => {
            let _ = writeln!(out, "no crossover on the grid");
        }
    }
    out
}

/// CSV columns: parameter, value, threshold, value − threshold. Annotation
/// constants, when given, go first as `#`-prefixed comment lines.
pub fn sweep_csv(result: &SweepResult, annotations: &[(&str, f64)]) -> String {
    let mut out = String::new();
    for (name, value) in annotations {
        let _ = writeln!(out, "# annotation,{name},{value}");
    }
    let _ = writeln!(
        out,
        "{},value,threshold,value_minus_threshold",
        result.parameter
    );
    for p in &result.points {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            p.parameter,
            p.value,
            p.threshold,
            p.margin()
        );
    }
    out
}

#[derive(Serialize)]
struct SweepDoc<'a> {
    parameter: &'a str,
    points: Vec<SweepPointDoc>,
    crossover: Option<f64>,
}

#[derive(Serialize)]
struct SweepPointDoc {
    parameter: f64,
    value: f64,
    threshold: f64,
    verdict: &'static str,
}

pub fn sweep_json(result: &SweepResult) -> String {
    let doc = SweepDoc {
        parameter: result.parameter,
        points: result
            .points
            .iter()
            .map(|p| SweepPointDoc {
                parameter: p.parameter,
                value: p.value,
                threshold: p.threshold,
                verdict: p.verdict.label(),
            })
            .collect(),
        crossover: result.crossover,
    };
    serde_json::to_string_pretty(&doc).expect("sweep serializes")
}

pub fn audit_text(record: &AuditRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "audit {} (d={}, sampler {}, samples {}, seed {})",
        record.bipartition, record.d, record.sampler, record.samples, record.seed
    );
    let _ = writeln!(out, "bound          {}", record.bound);
    let _ = writeln!(
        out,
        "max statistic  {}  (at {})",
        record.max_statistic, record.argmax
    );
    let _ = writeln!(
        out,
        "bound exceeded {}",
        if record.bound_exceeded() { "yes" } else { "no" }
    );
    out
}

/// CSV of the running maximum: sample, statistic, running_max, bound.
pub fn audit_csv(record: &AuditRecord) -> String {
    let mut out = String::from("sample,statistic,running_max,bound\n");
    for row in &record.rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.label, row.statistic, row.running_max, record.bound
        );
    }
    out
}

#[derive(Serialize)]
struct AuditDoc<'a> {
    bipartition: &'a str,
    d: usize,
    samples: usize,
    seed: u64,
    sampler: &'a str,
    bound: f64,
    max_statistic: f64,
    argmax: &'a str,
    bound_exceeded: bool,
}

pub fn audit_json(record: &AuditRecord) -> String {
    let doc = AuditDoc {
        bipartition: record.bipartition.label(),
        d: record.d,
        samples: record.samples,
        seed: record.seed,
        sampler: record.sampler.label(),
        bound: record.bound,
        max_statistic: record.max_statistic,
        argmax: &record.argmax,
        bound_exceeded: record.bound_exceeded(),
    };
    serde_json::to_string_pretty(&doc).expect("audit serializes")
}
