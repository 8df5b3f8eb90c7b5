//! Resolution of `--state` arguments and criterion dispatch.

use std::path::PathBuf;

use gme_core::{
    m1_ct, m_pt, CriterionKind, CriterionReport, Error as CoreError, StateFamily, StateSpec,
    ThresholdMode, TripartiteState,
};

use crate::sweep::SweepParam;

/// A `--state` argument: either a named family or a path to a state file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateInput {
    Family(StateFamily),
    File(PathBuf),
}

/// Family labels win; anything else is treated as a path.
pub fn parse_state_arg(raw: &str) -> StateInput {
    match raw.parse::<StateFamily>() {
        Ok(family) => StateInput::Family(family),
        Err(_) => StateInput::File(PathBuf::from(raw)),
    }
}

/// Run one criterion on one state.
pub fn evaluate_criterion(
    state: &TripartiteState,
    criterion: CriterionKind,
    mode: ThresholdMode,
) -> Result<CriterionReport, CoreError> {
    match criterion {
        CriterionKind::PtQubit => m_pt(state),
        CriterionKind::CtQudit => m1_ct(state, mode),
    }
}

/// Criterion evaluation along a noise axis for a generatable family.
#[derive(Debug, Clone, Copy)]
pub struct FamilySweep {
    pub family: StateFamily,
    pub d: usize,
    pub seed: u64,
    pub criterion: CriterionKind,
    pub mode: ThresholdMode,
    pub param: SweepParam,
}

impl FamilySweep {
    pub fn evaluate(&self, x: f64) -> Result<CriterionReport, CoreError> {
        let spec = StateSpec {
            family: self.family,
            d: self.d,
            visibility: self.param.to_visibility(x),
            seed: self.seed,
        };
        evaluate_criterion(&spec.build()?, self.criterion, self.mode)
    }
}
