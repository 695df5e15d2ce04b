//! Raw lambda terms over natural-number variable names.
//!
//! Terms are concrete syntax trees: `\x0. x0` and `\x1. x1` are different
//! values. Alpha-equivalence is a separate, decidable relation (see
//! [`crate::alpha`]).

use std::collections::BTreeSet;

/// A variable name. Names are plain naturals, used for both free and bound
/// occurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u64);

impl From<u64> for Var {
    fn from(index: u64) -> Self {
        Var(index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    App(Box<Term>, Box<Term>),
    Abs(Var, Box<Term>),
}

impl Term {
    pub fn var(index: u64) -> Term {
        Term::Var(Var(index))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn abs(binder: u64, body: Term) -> Term {
        Term::Abs(Var(binder), Box::new(body))
    }

    /// Left-nested application `head a1 a2 ... an`.
    pub fn apps(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(head, Term::app)
    }

    pub fn is_abstraction(&self) -> bool {
        matches!(self, Term::Abs(..))
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(f, a) => 1 + f.size() + a.size(),
            Term::Abs(_, b) => 1 + b.size(),
        }
    }

    /// Whether `x` occurs free in `self`.
    pub fn is_free(&self, x: Var) -> bool {
        match self {
            Term::Var(y) => *y == x,
            Term::App(f, a) => f.is_free(x) || a.is_free(x),
            Term::Abs(y, b) => *y != x && b.is_free(x),
        }
    }

    /// Whether `x` does not occur free in `self`.
    pub fn is_fresh(&self, x: Var) -> bool {
        !self.is_free(x)
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        match self {
            Term::Var(x) => {
                if !bound.contains(x) {
                    out.insert(*x);
                }
            }
            Term::App(f, a) => {
                f.collect_free(bound, out);
                a.collect_free(bound, out);
            }
            Term::Abs(x, b) => {
                bound.push(*x);
                b.collect_free(bound, out);
                bound.pop();
            }
        }
    }
}
