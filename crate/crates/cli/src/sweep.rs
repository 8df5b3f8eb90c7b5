//! Parameter sweeps over noise grids and crossover location by bisection.

use std::str::FromStr;

use gme_core::{CriterionReport, Error as CoreError, Verdict};
use thiserror::Error;

/// Bisection stops once the bracket is narrower than this.
pub const CROSSOVER_WIDTH: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("cannot parse grid '{0}', expected lo:hi:steps")]
    GridSyntax(String),
    #[error("degenerate grid: {0}")]
    DegenerateGrid(&'static str),
    #[error("value minus threshold does not change sign on the grid: no crossing")]
    NoCrossing,
    #[error(transparent)]
    Eval(#[from] CoreError),
}

/// Evaluation grid `lo:hi:steps`, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), SweepError> {
        if !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(SweepError::DegenerateGrid("endpoints must be finite"));
        }
        if self.hi <= self.lo {
            return Err(SweepError::DegenerateGrid("hi must exceed lo"));
        }
        if self.steps < 2 {
            return Err(SweepError::DegenerateGrid(
                "at least two grid points required",
            ));
        }
        Ok(())
    }

    /// The strictly increasing grid points.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let span = self.hi - self.lo;
        let last = self.steps - 1;
        (0..self.steps).map(move |k| self.lo + span * k as f64 / last as f64)
    }
}

impl FromStr for GridSpec {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, SweepError> {
        let bad = || SweepError::GridSyntax(s.to_string());
        let mut parts = s.split(':');
        let lo = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let hi = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let steps = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(GridSpec { lo, hi, steps })
    }
}

/// Which noise convention the swept parameter uses. Both map onto the
/// canonical visibility (the weight of the target state).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    Visibility,
    NoiseWeight,
}

impl SweepParam {
    pub fn label(&self) -> &'static str {
        match self {
            SweepParam::Visibility => "visibility",
            SweepParam::NoiseWeight => "noise-weight",
        }
    }

    pub fn to_visibility(&self, x: f64) -> f64 {
        match self {
            SweepParam::Visibility => x,
            SweepParam::NoiseWeight => 1.0 - x,
        }
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub parameter: f64,
    pub value: f64,
    pub threshold: f64,
    pub verdict: Verdict,
}

impl SweepPoint {
    pub fn margin(&self) -> f64 {
        self.value - self.threshold
    }
}

/// A full sweep: the evaluated grid plus the refined crossover, when the
/// margin changes sign somewhere on it.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// Label of the swept parameter.
    pub parameter: &'static str,
    pub points: Vec<SweepPoint>,
    pub crossover: Option<f64>,
}

/// Evaluate the criterion along the grid and refine the first sign change of
/// (value − threshold) down to [`CROSSOVER_WIDTH`].
pub fn scan<F>(eval: F, param: SweepParam, grid: GridSpec) -> Result<SweepResult, SweepError>
where
    F: Fn(f64) -> Result<CriterionReport, CoreError>,
{
    grid.validate()?;
    let mut points = Vec::with_capacity(grid.steps);
    for x in grid.points() {
        let report = eval(x)?;
        points.push(SweepPoint {
            parameter: x,
            value: report.value,
            threshold: report.threshold,
            verdict: report.verdict,
        });
    }

    let mut crossover = None;
    for pair in points.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if a.margin() == 0.0 {
            crossover = Some(a.parameter);
            break;
        }
        if (a.margin() > 0.0) != (b.margin() > 0.0) {
            crossover = Some(bisect(&eval, a.parameter, b.parameter, a.margin() > 0.0)?);
            break;
        }
    }
    // A sign change exactly at the last point.
    if crossover.is_none() {
        if let Some(last) = points.last() {
            if last.margin() == 0.0 {
                crossover = Some(last.parameter);
            }
        }
    }

    Ok(SweepResult {
        parameter: param.label(),
        points,
        crossover,
    })
}

/// Locate the crossover on the grid; errors with [`SweepError::NoCrossing`]
/// when the margin never changes sign.
pub fn crossover<F>(eval: F, param: SweepParam, grid: GridSpec) -> Result<f64, SweepError>
where
    F: Fn(f64) -> Result<CriterionReport, CoreError>,
{
    scan(eval, param, grid)?
        .crossover
        .ok_or(SweepError::NoCrossing)
}

fn bisect<F>(eval: &F, mut lo: f64, mut hi: f64, lo_positive: bool) -> Result<f64, SweepError>
where
    F: Fn(f64) -> Result<CriterionReport, CoreError>,
{
    while hi - lo > CROSSOVER_WIDTH {
        let mid = 0.5 * (lo + hi);
        let report = eval(mid)?;
        if (report.value - report.threshold > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
