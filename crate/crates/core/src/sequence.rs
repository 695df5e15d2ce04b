//! Standard reduction sequences: traces whose contracted redex positions
//! never decrease.
//!
//! [`standardize`] turns an arbitrary beta trace into one, by way of a
//! [`StdDerivation`]. [`leftmost_from_trace`] then reads a standard sequence
//! ending in a normal form as a leftmost (index 0 only) trace.

use crate::beta::{contract_at, RedexIndex, ReductionTrace, TraceStep};
use crate::derivation::{trace_to_std, StdDerivation};
use crate::error::{Error, Result};
use crate::strategies::HapTrace;
use crate::term::{Term, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardSequence {
    pub start: Term,
    pub steps: Vec<TraceStep>,
    /// Index of the last beta step, 0 when there is none.
    pub bound: RedexIndex,
}

impl StandardSequence {
    pub fn empty(start: Term) -> Self {
        StandardSequence {
            start,
            steps: Vec::new(),
            bound: 0,
        }
    }

    /// Build from steps, deriving the bound from the last beta step.
    pub fn from_steps(start: Term, steps: Vec<TraceStep>) -> Self {
        let bound = last_beta_index(&steps);
        StandardSequence {
            start,
            steps,
            bound,
        }
    }

    pub fn end(&self) -> &Term {
        self.steps.last().map_or(&self.start, TraceStep::result)
    }

    pub fn beta_indices(&self) -> Vec<RedexIndex> {
        self.steps
            .iter()
            .filter_map(TraceStep::beta_index)
            .collect()
    }

    pub fn to_trace(&self) -> ReductionTrace {
        ReductionTrace {
            start: self.start.clone(),
            steps: self.steps.clone(),
        }
    }

    pub fn into_trace(self) -> ReductionTrace {
        ReductionTrace {
            start: self.start,
            steps: self.steps,
        }
    }

    fn append(&mut self, other: StandardSequence) -> Result<()> {
        if self.end() != &other.start {
            return Err(Error::EndpointMismatch {
                expected: self.end().clone(),
                found: other.start,
            });
        }
        self.steps.extend(other.steps);
        self.bound = last_beta_index(&self.steps);
        Ok(())
    }

    /// Replay every step, then check that beta indices never decrease and
    /// that `bound` is the last one.
    pub fn check(&self) -> Result<()> {
        self.to_trace().check()?;
        let mut floor = 0;
        for (i, step) in self.steps.iter().enumerate() {
            if let Some(index) = step.beta_index() {
                if index < floor {
                    return Err(Error::MonotonicityViolation { step: i + 1 });
                }
                floor = index;
            }
        }
        if self.bound != floor {
            return Err(Error::BoundMismatch {
                declared: self.bound,
                actual: floor,
            });
        }
        Ok(())
    }
}

fn last_beta_index(steps: &[TraceStep]) -> RedexIndex {
    steps
        .iter()
        .rev()
        .find_map(TraceStep::beta_index)
        .unwrap_or(0)
}

pub fn validate_standard(s: &StandardSequence) -> bool {
    s.check().is_ok()
}

/// Reduce under a binder: every term becomes `\binder. t`.
pub fn seq_map_abs(s: &StandardSequence, binder: Var) -> StandardSequence {
    let wrap = |t: &Term| Term::Abs(binder, Box::new(t.clone()));
    StandardSequence {
        start: wrap(&s.start),
        steps: s
            .steps
            .iter()
            .map(|st| st.map_result(st.beta_index().unwrap_or(0), wrap))
            .collect(),
        bound: s.bound,
    }
}

/// Reduce in function position: every term becomes `t arg`. A step taken
/// while the function part is already an abstraction moves one position to
/// the right, past the redex that application forms.
pub fn seq_map_app_left(s: &StandardSequence, arg: &Term) -> StandardSequence {
    let wrap = |t: &Term| Term::app(t.clone(), arg.clone());
    let mut pred = &s.start;
    let mut steps = Vec::with_capacity(s.steps.len());
    for st in &s.steps {
        let index = st
            .beta_index()
            .map_or(0, |k| k + usize::from(pred.is_abstraction()));
        steps.push(st.map_result(index, wrap));
        pred = st.result();
    }
    StandardSequence::from_steps(wrap(&s.start), steps)
}

/// Reduce in argument position: every term becomes `fun t`, and every index
/// moves past the redexes of `fun` (and the application itself when `fun`
/// is an abstraction).
pub fn seq_map_app_right(s: &StandardSequence, fun: &Term) -> StandardSequence {
    let wrap = |t: &Term| Term::app(fun.clone(), t.clone());
    let offset = fun.count_redexes() + usize::from(fun.is_abstraction());
    let steps = s
        .steps
        .iter()
        .map(|st| st.map_result(st.beta_index().map_or(0, |k| k + offset), wrap))
        .collect();
    StandardSequence::from_steps(wrap(&s.start), steps)
}

/// Head reductions are leftmost, so a hap trace is a standard sequence with
/// bound 0.
pub fn hap_trace_to_seq(t: &HapTrace) -> StandardSequence {
    StandardSequence {
        start: t.start().clone(),
        steps: t.steps().to_vec(),
        bound: 0,
    }
}

/// Read a standard sequence off a derivation.
pub fn std_to_seq(d: &StdDerivation) -> Result<StandardSequence> {
    let seq = build_seq(d)?;
    seq.check()?;
    Ok(seq)
}

fn build_seq(d: &StdDerivation) -> Result<StandardSequence> {
    match d {
        StdDerivation::Var { prefix, .. } => Ok(hap_trace_to_seq(prefix)),
        StdDerivation::Abs {
            prefix,
            binder,
            body,
        } => {
            let mut seq = hap_trace_to_seq(prefix);
            seq.append(seq_map_abs(&build_seq(body)?, *binder))?;
            Ok(seq)
        }
        StdDerivation::App {
            prefix,
            left,
            right,
        } => {
            let mut seq = hap_trace_to_seq(prefix);
            let reduced_fun = left.endpoint();
            seq.append(seq_map_app_left(&build_seq(left)?, right.source()))?;
            seq.append(seq_map_app_right(&build_seq(right)?, &reduced_fun))?;
            Ok(seq)
        }
        StdDerivation::Alpha { inner, target } => {
            let mut seq = build_seq(inner)?;
            seq.steps.push(TraceStep::Alpha {
                result: target.clone(),
            });
            Ok(seq)
        }
    }
}

/// Standardization: a standard sequence with the same endpoints as `t`.
pub fn standardize(t: &ReductionTrace) -> Result<StandardSequence> {
    let d = trace_to_std(t)?;
    let seq = std_to_seq(&d)?;
    if seq.start != t.start || seq.end() != t.end() {
        return Err(Error::EndpointMismatch {
            expected: t.end().clone(),
            found: seq.end().clone(),
        });
    }
    Ok(seq)
}

/// Checks that a contraction producing a normal form was at index 0.
pub fn nf_step_is_leftmost(m: &Term, n: RedexIndex) -> Result<bool> {
    let next = contract_at(m, n)?;
    if !next.is_normal_form() {
        return Err(Error::PreconditionViolated(format!(
            "{next} is not a normal form"
        )));
    }
    Ok(n == 0)
}

/// A standard sequence ending in a normal form is a leftmost trace.
pub fn seq_to_leftmost(s: &StandardSequence) -> Result<ReductionTrace> {
    if !s.end().is_normal_form() {
        return Err(Error::NotNormalForm(s.end().clone()));
    }
    s.check()?;
    for (i, step) in s.steps.iter().enumerate() {
        if let Some(index) = step.beta_index().filter(|&k| k != 0) {
            return Err(Error::NonLeftmostStep { step: i + 1, index });
        }
    }
    Ok(s.to_trace())
}

/// Leftmost reduction finds any normal form that some trace reaches.
pub fn leftmost_from_trace(t: &ReductionTrace) -> Result<ReductionTrace> {
    if !t.end().is_normal_form() {
        return Err(Error::NotNormalForm(t.end().clone()));
    }
    seq_to_leftmost(&standardize(t)?)
}
