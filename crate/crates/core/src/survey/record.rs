use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::graph::{Girth, Graph};
use crate::solver::{cop_number_counted, SolveError};
use crate::structure::{lower_bound, prune_c_at_most_2, PruneVerdict, Rule};

use super::{Fault, Mode};

/// One line of the JSONL report. Exactly one of `cop_number` and
/// `pruned_by` is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub graph6: String,
    pub n: usize,
    pub min_deg: usize,
    pub max_deg: usize,
    pub girth: Girth,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cop_number: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pruned_by: Option<Rule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub states_explored: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

/// A processed class: its record plus facts the writer needs for totals.
pub(crate) struct Outcome {
    pub record: SurveyRecord,
    /// Solved cop number is below the structural lower bound.
    pub bound_violation: bool,
}

pub(crate) fn cop_number_with_fault(
    g: &Graph,
    k_max: usize,
    fault: Option<Fault>,
) -> Result<(usize, u64), SolveError> {
    let c = cop_number_counted(g, k_max)?;
    match fault {
        Some(Fault::CyclesNeedThreeCops) if g.n() >= 3 && g.is_regular(2) => Ok((3, c.states)),
        _ => Ok((c.value, c.states)),
    }
}

pub(crate) fn process(
    g: &Graph,
    canonical: bool,
    mode: Mode,
    k_max: usize,
    fault: Option<Fault>,
    timed: bool,
) -> Result<Outcome, SolveError> {
    let start = timed.then(Instant::now);
    let graph6 = if canonical {
        g.to_string()
    } else {
        canonical_form(g).as_str().to_string()
    };
    let verdict = match mode {
        Mode::Full => PruneVerdict::Unknown,
        Mode::Pruned | Mode::Audit => prune_c_at_most_2(g).map_err(|_| SolveError::Disconnected)?,
    };
    let mut record = SurveyRecord {
        graph6,
        n: g.n(),
        min_deg: g.min_degree(),
        max_deg: g.max_degree(),
        girth: g.girth(),
        cop_number: None,
        pruned_by: None,
        witness: None,
        states_explored: 0,
        micros: None,
    };
    let mut bound_violation = false;
    match verdict {
        PruneVerdict::ProvedAtMost2(cert) => {
            record.pruned_by = Some(cert.rule);
            record.witness = Some(cert.witness);
        }
        PruneVerdict::Unknown => {
            let (value, states) = cop_number_with_fault(g, k_max, fault)?;
            let bound = lower_bound(g).map_err(|_| SolveError::Disconnected)?;
            bound_violation = value < bound.value;
            record.cop_number = Some(value);
            record.states_explored = states;
        }
    }
    record.micros = start.map(|t| t.elapsed().as_micros() as u64);
    Ok(Outcome {
        record,
        bound_violation,
    })
}
