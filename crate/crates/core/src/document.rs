//! JSON trace files.
//!
//! ```json
//! { "start": "(\\x0. x0) x1",
//!   "steps": [ { "kind": "beta", "index": 0, "result": "x1" } ],
//!   "bound": 0 }
//! ```
//!
//! `bound` is written only for standard sequences. Unknown fields are
//! rejected.

use serde::{Deserialize, Serialize};

use crate::beta::{ReductionTrace, TraceStep};
use crate::error::{Error, Result};
use crate::sequence::StandardSequence;
use crate::syntax::parse_term;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDocument {
    pub start: String,
    pub steps: Vec<StepDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StepDocument {
    Beta { index: usize, result: String },
    Alpha { result: String },
}

impl TraceDocument {
    pub fn from_trace(t: &ReductionTrace) -> Self {
        TraceDocument {
            start: t.start.to_string(),
            steps: t.steps.iter().map(step_document).collect(),
            bound: None,
        }
    }

    pub fn from_sequence(s: &StandardSequence) -> Self {
        TraceDocument {
            start: s.start.to_string(),
            steps: s.steps.iter().map(step_document).collect(),
            bound: Some(s.bound),
        }
    }

    /// Parse every embedded term. Does not replay the steps.
    pub fn to_trace(&self) -> Result<ReductionTrace> {
        let start = parse_term(&self.start)?;
        let steps = self
            .steps
            .iter()
            .map(|st| {
                Ok(match st {
                    StepDocument::Beta { index, result } => TraceStep::Beta {
                        index: *index,
                        result: parse_term(result)?,
                    },
                    StepDocument::Alpha { result } => TraceStep::Alpha {
                        result: parse_term(result)?,
                    },
                })
            })
            .collect::<Result<_>>()?;
        Ok(ReductionTrace { start, steps })
    }

    /// As [`TraceDocument::to_trace`]; a missing bound is taken from the last
    /// beta step.
    pub fn to_sequence(&self) -> Result<StandardSequence> {
        let t = self.to_trace()?;
        let mut s = StandardSequence::from_steps(t.start, t.steps);
        if let Some(bound) = self.bound {
            s.bound = bound;
        }
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace documents always serialize")
    }
}

fn step_document(step: &TraceStep) -> StepDocument {
    match step {
        TraceStep::Beta { index, result } => StepDocument::Beta {
            index: *index,
            result: result.to_string(),
        },
        TraceStep::Alpha { result } => StepDocument::Alpha {
            result: result.to_string(),
        },
    }
}
