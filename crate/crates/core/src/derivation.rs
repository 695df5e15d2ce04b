//! Standard-reduction derivations and the construction that turns any beta
//! trace into one.
//!
//! A [`StdDerivation`] is a tree: at each node some head-reduction steps
//! (the node's `prefix`) lead to a variable, an application whose two sides
//! are reduced by sub-derivations, or an abstraction whose body is reduced
//! by a sub-derivation. `Alpha` nodes rename the endpoint. Every node stores
//! concrete terms, so [`certify_derivation`] can check a derivation without
//! trusting whoever built it.

use std::collections::BTreeMap;

use crate::alpha;
use crate::beta::{RedexIndex, ReductionTrace, TraceStep};
use crate::error::{Error, Result};
use crate::strategies::{hap_app_right, hap_trace_subst, HapTrace};
use crate::subst::{Restriction, Substitution};
use crate::term::{Term, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StdDerivation {
    /// `prefix` ends at `Var(var)`.
    Var { prefix: HapTrace, var: Var },
    /// `prefix` ends at `left.source() right.source()`.
    App {
        prefix: HapTrace,
        left: Box<StdDerivation>,
        right: Box<StdDerivation>,
    },
    /// `prefix` ends at `\binder. body.source()`.
    Abs {
        prefix: HapTrace,
        binder: Var,
        body: Box<StdDerivation>,
    },
    /// `inner.endpoint()` is alpha-equivalent to `target`.
    Alpha {
        inner: Box<StdDerivation>,
        target: Term,
    },
}

impl StdDerivation {
    pub fn source(&self) -> &Term {
        match self {
            StdDerivation::Var { prefix, .. }
            | StdDerivation::App { prefix, .. }
            | StdDerivation::Abs { prefix, .. } => prefix.start(),
            StdDerivation::Alpha { inner, .. } => inner.source(),
        }
    }

    pub fn endpoint(&self) -> Term {
        match self {
            StdDerivation::Var { var, .. } => Term::Var(*var),
            StdDerivation::App { left, right, .. } => Term::app(left.endpoint(), right.endpoint()),
            StdDerivation::Abs { binder, body, .. } => {
                Term::Abs(*binder, Box::new(body.endpoint()))
            }
            StdDerivation::Alpha { target, .. } => target.clone(),
        }
    }

    /// Number of nodes, for diagnostics.
    pub fn node_count(&self) -> usize {
        match self {
            StdDerivation::Var { .. } => 1,
            StdDerivation::App { left, right, .. } => 1 + left.node_count() + right.node_count(),
            StdDerivation::Abs { body, .. } => 1 + body.node_count(),
            StdDerivation::Alpha { inner, .. } => 1 + inner.node_count(),
        }
    }
}

/// Rename the endpoint of `d` to `target`, adding an `Alpha` node only when
/// they differ syntactically.
fn with_alpha(d: StdDerivation, target: Term) -> Result<StdDerivation> {
    let end = d.endpoint();
    if end == target {
        return Ok(d);
    }
    if !alpha::equivalent(&end, &target) {
        return Err(Error::AlphaCheckFailed {
            left: end,
            right: target,
        });
    }
    Ok(StdDerivation::Alpha {
        inner: Box::new(d),
        target,
    })
}

/// The reflexive derivation `m ->>st m`.
pub fn st_refl(m: &Term) -> StdDerivation {
    let prefix = HapTrace::empty(m.clone());
    match m {
        Term::Var(x) => StdDerivation::Var { prefix, var: *x },
        Term::App(f, a) => StdDerivation::App {
            prefix,
            left: Box::new(st_refl(f)),
            right: Box::new(st_refl(a)),
        },
        Term::Abs(x, b) => StdDerivation::Abs {
            prefix,
            binder: *x,
            body: Box::new(st_refl(b)),
        },
    }
}

/// `l ->>hap m` and `m ->>st n` give `l ->>st n`.
pub fn prepend_hap(t: &HapTrace, d: StdDerivation) -> Result<StdDerivation> {
    if t.end() != d.source() {
        return Err(Error::EndpointMismatch {
            expected: d.source().clone(),
            found: t.end().clone(),
        });
    }
    if t.steps().is_empty() {
        return Ok(d);
    }
    let extend = |prefix: HapTrace| t.clone().concat(prefix);
    Ok(match d {
        StdDerivation::Var { prefix, var } => StdDerivation::Var {
            prefix: extend(prefix)?,
            var,
        },
        StdDerivation::App {
            prefix,
            left,
            right,
        } => StdDerivation::App {
            prefix: extend(prefix)?,
            left,
            right,
        },
        StdDerivation::Abs {
            prefix,
            binder,
            body,
        } => StdDerivation::Abs {
            prefix: extend(prefix)?,
            binder,
            body,
        },
        StdDerivation::Alpha { inner, target } => StdDerivation::Alpha {
            inner: Box::new(prepend_hap(t, *inner)?),
            target,
        },
    })
}

/// A standard reduction for every variable: `σ ->st σ'`.
///
/// Variables without an entry map to the reflexive derivation at themselves.
/// The source and target substitutions are kept alongside the entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubstDerivation {
    entries: BTreeMap<Var, StdDerivation>,
    source: Substitution,
    target: Substitution,
}

impl SubstDerivation {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn with(mut self, x: Var, d: StdDerivation) -> Self {
        self.source = self.source.update(x, d.source().clone());
        self.target = self.target.update(x, d.endpoint());
        self.entries.insert(x, d);
        self
    }

    pub fn get(&self, x: Var) -> StdDerivation {
        self.entries
            .get(&x)
            .cloned()
            .unwrap_or_else(|| st_refl(&Term::Var(x)))
    }

    pub fn source_subst(&self) -> &Substitution {
        &self.source
    }

    pub fn target_subst(&self) -> &Substitution {
        &self.target
    }

    pub fn entries(&self) -> impl Iterator<Item = (Var, &StdDerivation)> {
        self.entries.iter().map(|(x, d)| (*x, d))
    }
}

/// `m ->>st n` and `σ ->st σ'` give `m.subst(σ) ->>st n.subst(σ')`.
pub fn st_subst(d: &StdDerivation, sd: &SubstDerivation) -> Result<StdDerivation> {
    let sigma = sd.source_subst();
    match d {
        StdDerivation::Var { prefix, var } => {
            let head = hap_trace_subst(prefix, sigma)?;
            prepend_hap(&head, sd.get(*var))
        }
        StdDerivation::App {
            prefix,
            left,
            right,
        } => Ok(StdDerivation::App {
            prefix: hap_trace_subst(prefix, sigma)?,
            left: Box::new(st_subst(left, sd)?),
            right: Box::new(st_subst(right, sd)?),
        }),
        StdDerivation::Abs {
            prefix,
            binder,
            body,
        } => {
            let sigma_target = sd.target_subst();
            let src_abs = Term::Abs(*binder, Box::new(body.source().clone())).subst(sigma);
            let tgt_abs = Term::Abs(*binder, Box::new(body.endpoint())).subst(sigma_target);
            // z is fresh for both images, so renaming either binder to z is
            // an alpha-conversion
            let pair = Term::app(src_abs, tgt_abs.clone());
            let z = Restriction::new(&Substitution::identity(), &pair).choose_fresh();

            let inner_sd = sd.clone().with(*binder, st_refl(&Term::Var(z)));
            let new_body = st_subst(body, &inner_sd)?;

            let mut head = hap_trace_subst(prefix, sigma)?.into_trace();
            let renamed = Term::Abs(z, Box::new(new_body.source().clone()));
            if head.end() != &renamed {
                if !alpha::equivalent(head.end(), &renamed) {
                    return Err(Error::AlphaCheckFailed {
                        left: head.end().clone(),
                        right: renamed,
                    });
                }
                head.push_alpha(renamed);
            }
            let node = StdDerivation::Abs {
                prefix: HapTrace(head),
                binder: z,
                body: Box::new(new_body),
            };
            with_alpha(node, tgt_abs)
        }
        StdDerivation::Alpha { inner, target } => {
            let out = st_subst(inner, sd)?;
            with_alpha(out, target.subst(sd.target_subst()))
        }
    }
}

/// `l ->>st (\x. m) n` gives `l ->>st m[x := n]`.
pub fn st_contract_top(d: &StdDerivation) -> Result<StdDerivation> {
    let end = d.endpoint();
    let goal = match &end {
        Term::App(f, n) => match f.as_ref() {
            Term::Abs(x, m) => m.subst_single(*x, n),
            _ => return Err(not_a_redex(&end)),
        },
        _ => return Err(not_a_redex(&end)),
    };
    match d {
        StdDerivation::Alpha { inner, .. } => with_alpha(st_contract_top(inner)?, goal),
        StdDerivation::App {
            prefix,
            left,
            right,
        } => match left.as_ref() {
            StdDerivation::Alpha { inner, .. } => {
                let unwrapped = StdDerivation::App {
                    prefix: prefix.clone(),
                    left: inner.clone(),
                    right: right.clone(),
                };
                with_alpha(st_contract_top(&unwrapped)?, goal)
            }
            StdDerivation::Abs {
                prefix: fun_prefix,
                binder,
                body,
            } => {
                // prefix: l ->>hap p n', fun_prefix: p ->>hap \x. m', body: m' ->>st m,
                // right: n' ->>st n
                let arg_source = right.source();
                let to_redex = hap_app_right(fun_prefix, arg_source);
                let redex = to_redex.end().clone();
                let contract = HapTrace::single(&redex)
                    .ok_or_else(|| Error::ShapeMismatch(format!("{redex} is not a redex")))?;
                let head = prefix.clone().concat(to_redex)?.concat(contract)?;
                let sd = SubstDerivation::identity().with(*binder, (**right).clone());
                let rest = st_subst(body, &sd)?;
                prepend_hap(&head, rest)
            }
            _ => Err(not_a_redex(&end)),
        },
        _ => Err(not_a_redex(&end)),
    }
}

fn not_a_redex(t: &Term) -> Error {
    Error::ShapeMismatch(format!("endpoint {t} is not a redex"))
}

/// `l ->>st m` and `m β n @ index` give `l ->>st n`.
pub fn st_append_beta(d: &StdDerivation, index: RedexIndex) -> Result<StdDerivation> {
    let end = d.endpoint();
    let count = end.count_redexes();
    if index >= count {
        return Err(Error::IndexOutOfRange { index, count });
    }
    append_in_range(d, &end, index)
}

fn append_in_range(d: &StdDerivation, end: &Term, index: RedexIndex) -> Result<StdDerivation> {
    match d {
        StdDerivation::Alpha { inner, target } => {
            let inner_end = inner.endpoint();
            let moved = append_in_range(inner, &inner_end, index)?;
            let contracted = crate::beta::transport_beta_along_alpha(&inner_end, index, target)?;
            with_alpha(moved, contracted)
        }
        StdDerivation::App {
            prefix,
            left,
            right,
        } => {
            let Term::App(f, _) = end else {
                return Err(Error::ShapeMismatch(format!("{end} is not an application")));
            };
            if f.is_abstraction() && index == 0 {
                return st_contract_top(d);
            }
            let offset = usize::from(f.is_abstraction());
            let in_fun = f.count_redexes();
            let (left, right) = if index < offset + in_fun {
                let l_end = left.endpoint();
                (
                    append_in_range(left, &l_end, index - offset)?,
                    (**right).clone(),
                )
            } else {
                let r_end = right.endpoint();
                let r = append_in_range(right, &r_end, index - offset - in_fun)?;
                ((**left).clone(), r)
            };
            Ok(StdDerivation::App {
                prefix: prefix.clone(),
                left: Box::new(left),
                right: Box::new(right),
            })
        }
        StdDerivation::Abs {
            prefix,
            binder,
            body,
        } => {
            let b_end = body.endpoint();
            Ok(StdDerivation::Abs {
                prefix: prefix.clone(),
                binder: *binder,
                body: Box::new(append_in_range(body, &b_end, index)?),
            })
        }
        StdDerivation::Var { var, .. } => Err(Error::IndexOutOfRange {
            index,
            count: Term::Var(*var).count_redexes(),
        }),
    }
}

/// Fold a beta trace into a standard-reduction derivation.
pub fn trace_to_std(t: &ReductionTrace) -> Result<StdDerivation> {
    t.check()?;
    let mut d = st_refl(&t.start);
    for (i, step) in t.steps.iter().enumerate() {
        d = match step {
            TraceStep::Beta { index, .. } => st_append_beta(&d, *index)?,
            TraceStep::Alpha { result } => with_alpha(d, result.clone())?,
        };
        let end = d.endpoint();
        if &end != step.result() {
            return Err(Error::InvalidTrace {
                step: i + 1,
                reason: format!("derivation ends at {end}, trace at {}", step.result()),
            });
        }
    }
    Ok(d)
}

/// Check every node invariant. Returns a description of the first failure.
pub fn check_derivation(d: &StdDerivation) -> std::result::Result<(), String> {
    let check_prefix = |prefix: &HapTrace, expected: Term| {
        prefix.check().map_err(|e| format!("prefix: {e}"))?;
        if prefix.end() != &expected {
            return Err(format!(
                "prefix ends at {}, node expects {expected}",
                prefix.end()
            ));
        }
        Ok(())
    };
    match d {
        StdDerivation::Var { prefix, var } => check_prefix(prefix, Term::Var(*var)),
        StdDerivation::App {
            prefix,
            left,
            right,
        } => {
            check_prefix(
                prefix,
                Term::app(left.source().clone(), right.source().clone()),
            )?;
            check_derivation(left)?;
            check_derivation(right)
        }
        StdDerivation::Abs {
            prefix,
            binder,
            body,
        } => {
            check_prefix(prefix, Term::Abs(*binder, Box::new(body.source().clone())))?;
            check_derivation(body)
        }
        StdDerivation::Alpha { inner, target } => {
            check_derivation(inner)?;
            let end = inner.endpoint();
            if alpha::equivalent(&end, target) {
                Ok(())
            } else {
                Err(format!("{end} is not alpha-equivalent to {target}"))
            }
        }
    }
}

pub fn certify_derivation(d: &StdDerivation) -> bool {
    check_derivation(d).is_ok()
}
