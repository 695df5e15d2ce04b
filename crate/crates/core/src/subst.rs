//! Multiple substitution in the style of Stoughton.
//!
//! A [`Substitution`] assigns a term to every variable and is the identity
//! almost everywhere. Applying one to a term is plain structural recursion:
//! every abstraction it passes through is renamed to the binder picked by
//! [`Restriction::choose_fresh`], so no capture check or case split on the
//! binder is ever needed. A side effect is that alpha-equivalent terms map to
//! syntactically identical results under the same substitution.

use std::collections::{BTreeMap, BTreeSet};

use crate::term::{Term, Var};

/// Identity-almost-everywhere map from variables to terms.
///
/// Only entries whose image differs from the variable itself are stored, so
/// two substitutions are `==` exactly when they agree on every variable.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Substitution {
    support: BTreeMap<Var, Term>,
}

impl Substitution {
    /// The identity substitution.
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn lookup(&self, x: Var) -> Term {
        self.support.get(&x).cloned().unwrap_or(Term::Var(x))
    }

    /// `self` everywhere except at `x`, where it yields `m`.
    pub fn update(&self, x: Var, m: Term) -> Self {
        let mut next = self.clone();
        next.set(x, m);
        next
    }

    fn set(&mut self, x: Var, m: Term) {
        if m == Term::Var(x) {
            self.support.remove(&x);
        } else {
            self.support.insert(x, m);
        }
    }

    /// The single substitution `[x := m]`.
    pub fn single(x: Var, m: Term) -> Self {
        Self::identity().update(x, m)
    }

    /// Entries that differ from the identity, in variable order.
    pub fn support(&self) -> impl Iterator<Item = (Var, &Term)> {
        self.support.iter().map(|(x, m)| (*x, m))
    }

    pub fn is_identity(&self) -> bool {
        self.support.is_empty()
    }
}

impl FromIterator<(Var, Term)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (Var, Term)>>(iter: I) -> Self {
        let mut s = Substitution::identity();
        for (x, m) in iter {
            s.set(x, m);
        }
        s
    }
}

/// A substitution observed only through the free variables of `scope`.
#[derive(Debug, Clone, Copy)]
pub struct Restriction<'a> {
    pub subst: &'a Substitution,
    pub scope: &'a Term,
}

impl<'a> Restriction<'a> {
    pub fn new(subst: &'a Substitution, scope: &'a Term) -> Self {
        Restriction { subst, scope }
    }

    /// Variables occurring free in the image of some free variable of the
    /// scope.
    fn image_free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        for y in self.scope.free_vars() {
            match self.subst.support.get(&y) {
                Some(m) => out.extend(m.free_vars()),
                None => {
                    out.insert(y);
                }
            }
        }
        out
    }

    /// `x` is fresh in the image of every free variable of the scope.
    pub fn is_fresh(&self, x: Var) -> bool {
        self.scope
            .free_vars()
            .into_iter()
            .all(|y| self.subst.lookup(y).is_fresh(x))
    }

    /// The least variable fresh for this restriction.
    pub fn choose_fresh(&self) -> Var {
        let taken = self.image_free_vars();
        // `taken` is finite, so some index in 0..=len is free
        (0..)
            .map(Var)
            .find(|v| !taken.contains(v))
            .expect("finite set of taken names")
    }
}

impl Term {
    /// Apply `s` to every free variable of `self`, renaming every binder.
    pub fn subst(&self, s: &Substitution) -> Term {
        match self {
            Term::Var(x) => s.lookup(*x),
            Term::App(f, a) => Term::app(f.subst(s), a.subst(s)),
            Term::Abs(x, body) => {
                let y = Restriction::new(s, self).choose_fresh();
                let inner = s.update(*x, Term::Var(y));
                Term::Abs(y, Box::new(body.subst(&inner)))
            }
        }
    }

    /// `self[x := n]`.
    pub fn subst_single(&self, x: Var, n: &Term) -> Term {
        self.subst(&Substitution::single(x, n.clone()))
    }
}
