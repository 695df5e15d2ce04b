//! Head reduction in application (hap), leftmost reduction, and a fueled
//! leftmost-outermost normalizer.

use crate::alpha;
use crate::beta::{contract_at, ReductionTrace, TraceStep};
use crate::error::{Error, Result};
use crate::subst::Substitution;
use crate::term::Term;

/// Contract the head redex of an application chain
/// `(\x. a) b c2 ... ck`, giving `a[x := b] c2 ... ck`.
///
/// Only the left spine is inspected; hap never fires under an abstraction.
pub fn hap_step(m: &Term) -> Option<Term> {
    match m {
        Term::App(f, a) => match f.as_ref() {
            Term::Abs(x, body) => Some(body.subst_single(*x, a)),
            _ => hap_step(f).map(|f2| Term::app(f2, (**a).clone())),
        },
        _ => None,
    }
}

/// Contract redex 0, if there is one.
pub fn leftmost_step(m: &Term) -> Option<Term> {
    contract_at(m, 0).ok()
}

/// Checks that a hap step is also the leftmost step.
pub fn hap_implies_leftmost(m: &Term) -> Result<bool> {
    let hap =
        hap_step(m).ok_or_else(|| Error::PreconditionViolated(format!("{m} has no head redex")))?;
    Ok(leftmost_step(m).as_ref() == Some(&hap))
}

/// A reduction trace whose beta steps are all hap steps (hence all at
/// index 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HapTrace(pub ReductionTrace);

impl HapTrace {
    pub fn empty(start: Term) -> Self {
        HapTrace(ReductionTrace::empty(start))
    }

    pub fn start(&self) -> &Term {
        &self.0.start
    }

    pub fn end(&self) -> &Term {
        self.0.end()
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.0.steps
    }

    pub fn as_trace(&self) -> &ReductionTrace {
        &self.0
    }

    pub fn into_trace(self) -> ReductionTrace {
        self.0
    }

    pub fn concat(self, other: HapTrace) -> Result<HapTrace> {
        self.0.concat(other.0).map(HapTrace)
    }

    /// One hap step from `m`, if `m` has a head redex.
    pub fn single(m: &Term) -> Option<HapTrace> {
        let next = hap_step(m)?;
        let mut t = ReductionTrace::empty(m.clone());
        t.push_beta(0, next);
        Some(HapTrace(t))
    }

    pub fn check(&self) -> Result<()> {
        for (i, (pred, step)) in self.0.transitions().enumerate() {
            let ok = match step {
                TraceStep::Beta { index, result } => {
                    *index == 0 && hap_step(pred).as_ref() == Some(result)
                }
                TraceStep::Alpha { result } => alpha::equivalent(pred, result),
            };
            if !ok {
                return Err(Error::InvalidTrace {
                    step: i + 1,
                    reason: "not a head-reduction step".into(),
                });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }
}

/// `m ->>hap n` gives `m p ->>hap n p`.
pub fn hap_app_right(t: &HapTrace, p: &Term) -> HapTrace {
    let wrap = |m: &Term| Term::app(m.clone(), p.clone());
    HapTrace(ReductionTrace {
        start: wrap(t.start()),
        steps: t.steps().iter().map(|s| s.map_result(0, wrap)).collect(),
    })
}

/// Given `hap_step(m) == target`, the hap step of `m.subst(s)`, checked to
/// be alpha-equivalent to `target.subst(s)`.
pub fn hap_subst_step(m: &Term, target: &Term, s: &Substitution) -> Result<Term> {
    if hap_step(m).as_ref() != Some(target) {
        return Err(Error::PreconditionViolated(format!(
            "{target} is not the head reduct of {m}"
        )));
    }
    let image = m.subst(s);
    let stepped = hap_step(&image).ok_or_else(|| {
        Error::ShapeMismatch(format!("substitution instance {image} lost its head redex"))
    })?;
    let expected = target.subst(s);
    if !alpha::equivalent(&stepped, &expected) {
        return Err(Error::AlphaCheckFailed {
            left: stepped,
            right: expected,
        });
    }
    Ok(stepped)
}

/// `m ->>hap n` gives `m.subst(s) ->>hap n.subst(s)`, ending syntactically at
/// `n.subst(s)`.
///
/// Each hap step is followed by an alpha step when the substituted reduct
/// differs syntactically from the substituted original result. Alpha steps
/// of the input collapse, since alpha-equivalent terms have identical
/// images.
pub fn hap_trace_subst(t: &HapTrace, s: &Substitution) -> Result<HapTrace> {
    let mut out = ReductionTrace::empty(t.start().subst(s));
    for (pred, step) in t.as_trace().transitions() {
        let target = step.result().subst(s);
        if let TraceStep::Beta { .. } = step {
            let stepped = hap_subst_step(pred, step.result(), s)?;
            let differs = stepped != target;
            out.push_beta(0, stepped);
            if differs {
                out.push_alpha(target);
            }
        } else if &target != out.end() {
            if !alpha::equivalent(out.end(), &target) {
                return Err(Error::AlphaCheckFailed {
                    left: out.end().clone(),
                    right: target,
                });
            }
            out.push_alpha(target);
        }
    }
    Ok(HapTrace(out))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeOutcome {
    Normalized(ReductionTrace),
    FuelExhausted(ReductionTrace),
}

impl NormalizeOutcome {
    pub fn trace(&self) -> &ReductionTrace {
        match self {
            NormalizeOutcome::Normalized(t) | NormalizeOutcome::FuelExhausted(t) => t,
        }
    }

    pub fn is_normalized(&self) -> bool {
        matches!(self, NormalizeOutcome::Normalized(_))
    }
}

/// Contract redex 0 repeatedly, at most `fuel` times.
pub fn normalize_leftmost(m: &Term, fuel: usize) -> NormalizeOutcome {
    let mut trace = ReductionTrace::empty(m.clone());
    for _ in 0..fuel {
        match leftmost_step(trace.end()) {
            Some(next) => trace.push_beta(0, next),
            None => return NormalizeOutcome::Normalized(trace),
        }
    }
    if trace.end().is_normal_form() {
        NormalizeOutcome::Normalized(trace)
    } else {
        NormalizeOutcome::FuelExhausted(trace)
    }
}
