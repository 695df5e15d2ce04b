//! Decision procedure for alpha-equivalence.

use crate::error::{Error, Result};
use crate::subst::{Restriction, Substitution};
use crate::term::{Term, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaVerdict {
    pub equivalent: bool,
    /// The common fresh name used to compare two abstractions, present only
    /// when both terms are abstractions and they are equivalent.
    pub witness_fresh_var: Option<Var>,
}

/// Decide `a ~α b`.
///
/// Two abstractions are compared by substituting one common name, fresh in
/// both, for their binders and recursing on the bodies. The name is the
/// least variable free in neither term.
pub fn alpha_eq(a: &Term, b: &Term) -> AlphaVerdict {
    match (a, b) {
        (Term::Abs(..), Term::Abs(..)) => {
            let y = common_fresh(a, b);
            let equivalent = abs_bodies_equivalent(a, b, y);
            AlphaVerdict {
                equivalent,
                witness_fresh_var: equivalent.then_some(y),
            }
        }
        _ => AlphaVerdict {
            equivalent: equivalent(a, b),
            witness_fresh_var: None,
        },
    }
}

/// Boolean form of [`alpha_eq`].
pub fn equivalent(a: &Term, b: &Term) -> bool {
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => x == y,
        (Term::App(f, s), Term::App(g, t)) => equivalent(f, g) && equivalent(s, t),
        (Term::Abs(..), Term::Abs(..)) => abs_bodies_equivalent(a, b, common_fresh(a, b)),
        _ => false,
    }
}

fn common_fresh(a: &Term, b: &Term) -> Var {
    let pair = Term::app(a.clone(), b.clone());
    Restriction::new(&Substitution::identity(), &pair).choose_fresh()
}

fn abs_bodies_equivalent(a: &Term, b: &Term, y: Var) -> bool {
    let (Term::Abs(x, m), Term::Abs(x2, m2)) = (a, b) else {
        return false;
    };
    // renaming a variable to a variable preserves size, so the recursion
    // is on strictly smaller terms
    let lhs = m.subst_single(*x, &Term::Var(y));
    let rhs = m2.subst_single(*x2, &Term::Var(y));
    equivalent(&lhs, &rhs)
}

fn require_equivalent(a: &Term, b: &Term) -> Result<()> {
    if equivalent(a, b) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!(
            "{a} and {b} are not alpha-equivalent"
        )))
    }
}

/// Checks that alpha-equivalent terms become identical under `s`.
pub fn subst_collapses(a: &Term, b: &Term, s: &Substitution) -> Result<bool> {
    require_equivalent(a, b)?;
    Ok(a.subst(s) == b.subst(s))
}

/// Checks that alpha-equivalent terms have the same number of redexes.
pub fn same_redex_count(a: &Term, b: &Term) -> Result<bool> {
    require_equivalent(a, b)?;
    Ok(a.count_redexes() == b.count_redexes())
}
