//! Positional beta-contraction and reduction traces.
//!
//! Redexes are numbered left to right in the linear syntax, starting at 0.
//! For an application `f a`, when `f` is an abstraction the application
//! itself is redex 0 and the redexes of `f` start at 1; the redexes of `a`
//! follow those of `f`.

use crate::alpha;
use crate::error::{Error, Result};
use crate::term::Term;

/// Left-to-right position of a redex.
pub type RedexIndex = usize;

impl Term {
    pub fn count_redexes(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(f, a) => {
                let own = usize::from(f.is_abstraction());
                own + f.count_redexes() + a.count_redexes()
            }
            Term::Abs(_, b) => b.count_redexes(),
        }
    }

    pub fn is_normal_form(&self) -> bool {
        self.count_redexes() == 0
    }
}

/// Contract the redex at position `n`.
pub fn contract_at(m: &Term, n: RedexIndex) -> Result<Term> {
    let count = m.count_redexes();
    if n >= count {
        return Err(Error::IndexOutOfRange { index: n, count });
    }
    Ok(contract_in_range(m, n))
}

fn contract_in_range(m: &Term, n: RedexIndex) -> Term {
    match m {
        Term::Var(_) => unreachable!("variables have no redexes"),
        Term::Abs(x, body) => Term::Abs(*x, Box::new(contract_in_range(body, n))),
        Term::App(f, a) => {
            if let (Term::Abs(x, body), 0) = (f.as_ref(), n) {
                return body.subst_single(*x, a);
            }
            let offset = usize::from(f.is_abstraction());
            let in_fun = f.count_redexes();
            if n < offset + in_fun {
                Term::app(contract_in_range(f, n - offset), (**a).clone())
            } else {
                Term::app((**f).clone(), contract_in_range(a, n - offset - in_fun))
            }
        }
    }
}

/// All one-step successors, in index order.
pub fn successors(m: &Term) -> Vec<(RedexIndex, Term)> {
    (0..m.count_redexes())
        .map(|n| (n, contract_in_range(m, n)))
        .collect()
}

/// Contract `m_prime` at the index that was contracted in `m`, checking that
/// the two results are alpha-equivalent.
pub fn transport_beta_along_alpha(m: &Term, n: RedexIndex, m_prime: &Term) -> Result<Term> {
    if !alpha::equivalent(m, m_prime) {
        return Err(Error::PreconditionViolated(format!(
            "{m} and {m_prime} are not alpha-equivalent"
        )));
    }
    let original = contract_at(m, n)?;
    let moved = contract_at(m_prime, n)?;
    if !alpha::equivalent(&moved, &original) {
        return Err(Error::AlphaCheckFailed {
            left: moved,
            right: original,
        });
    }
    Ok(moved)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    Beta { index: RedexIndex, result: Term },
    Alpha { result: Term },
}

impl TraceStep {
    pub fn result(&self) -> &Term {
        match self {
            TraceStep::Beta { result, .. } | TraceStep::Alpha { result } => result,
        }
    }

    pub fn beta_index(&self) -> Option<RedexIndex> {
        match self {
            TraceStep::Beta { index, .. } => Some(*index),
            TraceStep::Alpha { .. } => None,
        }
    }

    /// Rewrites the stored term(s), keeping the kind.
    pub(crate) fn map_result(&self, index: RedexIndex, f: impl FnOnce(&Term) -> Term) -> TraceStep {
        match self {
            TraceStep::Beta { result, .. } => TraceStep::Beta {
                index,
                result: f(result),
            },
            TraceStep::Alpha { result } => TraceStep::Alpha { result: f(result) },
        }
    }
}

/// A witness of `start ->>β end()`: beta steps at explicit positions
/// interleaved with explicit alpha-conversions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: Term,
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn empty(start: Term) -> Self {
        ReductionTrace {
            start,
            steps: Vec::new(),
        }
    }

    pub fn end(&self) -> &Term {
        self.steps.last().map_or(&self.start, TraceStep::result)
    }

    pub fn push_beta(&mut self, index: RedexIndex, result: Term) {
        self.steps.push(TraceStep::Beta { index, result });
    }

    pub fn push_alpha(&mut self, result: Term) {
        self.steps.push(TraceStep::Alpha { result });
    }

    pub fn beta_indices(&self) -> Vec<RedexIndex> {
        self.steps
            .iter()
            .filter_map(TraceStep::beta_index)
            .collect()
    }

    /// Pairs each step with its predecessor term.
    pub fn transitions(&self) -> impl Iterator<Item = (&Term, &TraceStep)> {
        let preds = std::iter::once(&self.start).chain(self.steps.iter().map(TraceStep::result));
        preds.zip(self.steps.iter())
    }

    /// Append `other`, which must start where `self` ends.
    pub fn concat(mut self, other: ReductionTrace) -> Result<ReductionTrace> {
        if self.end() != &other.start {
            return Err(Error::EndpointMismatch {
                expected: self.end().clone(),
                found: other.start,
            });
        }
        self.steps.extend(other.steps);
        Ok(self)
    }

    /// Recompute every step. Steps are numbered from 1 in the error.
    pub fn check(&self) -> Result<()> {
        for (i, (pred, step)) in self.transitions().enumerate() {
            check_step(pred, step).map_err(|reason| Error::InvalidTrace {
                step: i + 1,
                reason,
            })?;
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }
}

fn check_step(pred: &Term, step: &TraceStep) -> std::result::Result<(), String> {
    match step {
        TraceStep::Beta { index, result } => {
            let expected = contract_at(pred, *index).map_err(|e| e.to_string())?;
            if &expected != result {
                return Err(format!(
                    "contracting redex {index} gives {expected}, not {result}"
                ));
            }
        }
        TraceStep::Alpha { result } => {
            if !alpha::equivalent(pred, result) {
                return Err(format!("{pred} is not alpha-equivalent to {result}"));
            }
        }
    }
    Ok(())
}

/// Whether every step of `t` replays.
pub fn validate_trace(t: &ReductionTrace) -> bool {
    t.is_valid()
}
