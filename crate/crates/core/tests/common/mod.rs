//! Generators and independent oracles shared by the integration tests.
//!
//! Nothing here calls into the substitution, alpha or redex-indexing code of
//! the crate; the oracles are written from the textbook definitions so they
//! can check the implementation.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use lamstd::{Substitution, Term, Var};
use proptest::prelude::*;
use rand::Rng;

pub fn v(i: u64) -> Term {
    Term::var(i)
}

pub fn id(x: u64) -> Term {
    Term::abs(x, v(x))
}

pub fn omega() -> Term {
    let w = Term::abs(1, Term::app(v(1), v(1)));
    Term::app(w.clone(), w)
}

// ---------------------------------------------------------------- generators

/// Every term of exactly `size` nodes over the names `0..names`.
pub fn terms_of_size(size: usize, names: u64, memo: &mut HashMap<usize, Vec<Term>>) -> Vec<Term> {
    if let Some(ts) = memo.get(&size) {
        return ts.clone();
    }
    let mut out = Vec::new();
    if size == 1 {
        out.extend((0..names).map(v));
    } else if size > 1 {
        for body in terms_of_size(size - 1, names, memo) {
            for x in 0..names {
                out.push(Term::abs(x, body.clone()));
            }
        }
        for left in 1..size - 1 {
            let right = size - 1 - left;
            let fs = terms_of_size(left, names, memo);
            let args = terms_of_size(right, names, memo);
            for f in &fs {
                for a in &args {
                    out.push(Term::app(f.clone(), a.clone()));
                }
            }
        }
    }
    memo.insert(size, out.clone());
    out
}

/// Every term of at most `max_size` nodes over the names `0..names`.
pub fn all_terms(max_size: usize, names: u64) -> Vec<Term> {
    let mut memo = HashMap::new();
    (1..=max_size)
        .flat_map(|s| terms_of_size(s, names, &mut memo))
        .collect()
}

/// A random term of at most `size` nodes. Abstractions and applications are
/// weighted so that redexes are common.
pub fn random_term<R: Rng>(rng: &mut R, size: usize, names: u64) -> Term {
    if size <= 1 {
        return v(rng.gen_range(0..names));
    }
    match rng.gen_range(0..10) {
        0..=1 => v(rng.gen_range(0..names)),
        2..=4 => Term::abs(rng.gen_range(0..names), random_term(rng, size - 1, names)),
        _ => {
            if size < 3 {
                return v(rng.gen_range(0..names));
            }
            let left = rng.gen_range(1..size - 1);
            let f = if rng.gen_bool(0.4) && left >= 2 {
                Term::abs(rng.gen_range(0..names), random_term(rng, left - 1, names))
            } else {
                random_term(rng, left, names)
            };
            Term::app(f, random_term(rng, size - 1 - left, names))
        }
    }
}

pub fn random_subst<R: Rng>(rng: &mut R, size: usize, names: u64) -> Substitution {
    let entries = rng.gen_range(0..=3);
    (0..entries)
        .map(|_| (Var(rng.gen_range(0..names)), random_term(rng, size, names)))
        .collect()
}

/// A random application chain `h a1 ... ak`, with a redex head about half
/// the time.
pub fn random_chain<R: Rng>(rng: &mut R, depth: usize, names: u64) -> Term {
    let head = if rng.gen_bool(0.5) {
        Term::app(
            Term::abs(rng.gen_range(0..names), random_term(rng, 5, names)),
            random_term(rng, 4, names),
        )
    } else {
        random_term(rng, 5, names)
    };
    let k = rng.gen_range(0..=depth);
    (0..k).fold(head, |acc, _| Term::app(acc, random_term(rng, 4, names)))
}

/// Rename every binder of `m` to a random name that does not capture,
/// without using the crate's substitution.
pub fn random_alpha_variant<R: Rng>(rng: &mut R, m: &Term, names: u64) -> Term {
    fn go<R: Rng>(rng: &mut R, m: &Term, env: &mut Vec<(Var, Var)>, names: u64) -> Term {
        let rename = |env: &[(Var, Var)], x: Var| {
            env.iter()
                .rev()
                .find(|(old, _)| *old == x)
                .map_or(x, |(_, new)| *new)
        };
        match m {
            Term::Var(x) => Term::Var(rename(env, *x)),
            Term::App(f, a) => Term::app(go(rng, f, env, names), go(rng, a, env, names)),
            Term::Abs(x, body) => {
                let taken: BTreeSet<Var> = naive_free_vars(m)
                    .into_iter()
                    .map(|z| rename(env, z))
                    .collect();
                let candidates: Vec<Var> = (0..names + 2)
                    .map(Var)
                    .filter(|y| !taken.contains(y))
                    .collect();
                let y = candidates[rng.gen_range(0..candidates.len())];
                env.push((*x, y));
                let out = Term::Abs(y, Box::new(go(rng, body, env, names)));
                env.pop();
                out
            }
        }
    }
    go(rng, m, &mut Vec::new(), names)
}

pub fn arb_term(max_depth: u32, names: u64) -> impl Strategy<Value = Term> {
    let leaf = (0..names).prop_map(v);
    leaf.prop_recursive(max_depth, 24, 2, move |inner| {
        prop_oneof![
            (0..names, inner.clone()).prop_map(|(x, b)| Term::abs(x, b)),
            (inner.clone(), inner.clone()).prop_map(|(f, a)| Term::app(f, a)),
            (0..names, inner.clone(), inner).prop_map(|(x, b, a)| Term::app(Term::abs(x, b), a)),
        ]
    })
}

pub fn arb_subst(names: u64) -> impl Strategy<Value = Substitution> {
    proptest::collection::vec((0..names, arb_term(3, names)), 0..4)
        .prop_map(|entries| entries.into_iter().map(|(x, m)| (Var(x), m)).collect())
}

// ------------------------------------------------------------------ oracles

pub fn naive_free_vars(m: &Term) -> BTreeSet<Var> {
    match m {
        Term::Var(x) => [*x].into_iter().collect(),
        Term::App(f, a) => naive_free_vars(f)
            .union(&naive_free_vars(a))
            .copied()
            .collect(),
        Term::Abs(x, b) => {
            let mut s = naive_free_vars(b);
            s.remove(x);
            s
        }
    }
}

/// Locally nameless form: bound occurrences become binder depths, free ones
/// keep their names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Nameless {
    Bound(usize),
    Free(u64),
    App(Box<Nameless>, Box<Nameless>),
    Abs(Box<Nameless>),
}

pub fn nameless(m: &Term) -> Nameless {
    fn go(m: &Term, scope: &mut Vec<Var>) -> Nameless {
        match m {
            Term::Var(x) => match scope.iter().rev().position(|y| y == x) {
                Some(k) => Nameless::Bound(k),
                None => Nameless::Free(x.0),
            },
            Term::App(f, a) => Nameless::App(Box::new(go(f, scope)), Box::new(go(a, scope))),
            Term::Abs(x, b) => {
                scope.push(*x);
                let body = go(b, scope);
                scope.pop();
                Nameless::Abs(Box::new(body))
            }
        }
    }
    go(m, &mut Vec::new())
}

pub fn oracle_alpha_eq(a: &Term, b: &Term) -> bool {
    nameless(a) == nameless(b)
}

/// Textbook capture-avoiding `m[x := n]`, renaming a binder only when it
/// would capture, to one past the largest name in sight.
pub fn naive_subst(m: &Term, x: Var, n: &Term) -> Term {
    match m {
        Term::Var(y) if *y == x => n.clone(),
        Term::Var(_) => m.clone(),
        Term::App(f, a) => Term::app(naive_subst(f, x, n), naive_subst(a, x, n)),
        Term::Abs(y, _) if *y == x => m.clone(),
        Term::Abs(y, body) => {
            let fv_n = naive_free_vars(n);
            if fv_n.contains(y) && naive_free_vars(body).contains(&x) {
                let fresh = Var(max_name(m).max(max_name(n)).max(x.0) + 1);
                let renamed = naive_subst(body, *y, &Term::Var(fresh));
                Term::Abs(fresh, Box::new(naive_subst(&renamed, x, n)))
            } else {
                Term::Abs(*y, Box::new(naive_subst(body, x, n)))
            }
        }
    }
}

fn max_name(m: &Term) -> u64 {
    match m {
        Term::Var(x) => x.0,
        Term::App(f, a) => max_name(f).max(max_name(a)),
        Term::Abs(x, b) => x.0.max(max_name(b)),
    }
}

fn naive_is_abs(m: &Term) -> bool {
    matches!(m, Term::Abs(..))
}

fn naive_count(m: &Term) -> usize {
    match m {
        Term::Var(_) => 0,
        Term::App(f, a) => usize::from(naive_is_abs(f)) + naive_count(f) + naive_count(a),
        Term::Abs(_, b) => naive_count(b),
    }
}

/// All `(n, result)` with `m β result @ n`, generated by applying the six
/// inference rules bottom-up. `contract` performs the outer-redex case.
pub fn rule_derivations(
    m: &Term,
    contract: &dyn Fn(&Term, Var, &Term) -> Term,
) -> Vec<(usize, Term)> {
    let mut out = Vec::new();
    match m {
        Term::Var(_) => {}
        Term::Abs(x, a) => {
            for (n, b) in rule_derivations(a, contract) {
                out.push((n, Term::Abs(*x, Box::new(b))));
            }
        }
        Term::App(f, c) => {
            if let Term::Abs(x, a) = f.as_ref() {
                out.push((0, contract(a, *x, c)));
            }
            let abs_left = naive_is_abs(f);
            for (n, b) in rule_derivations(f, contract) {
                // appNoAbsL / appAbsL
                let n = if abs_left { n + 1 } else { n };
                out.push((n, Term::app(b, (**c).clone())));
            }
            for (n, b) in rule_derivations(c, contract) {
                // appNoAbsR / appAbsR
                let n = n + naive_count(f) + usize::from(abs_left);
                out.push((n, Term::app((**f).clone(), b)));
            }
        }
    }
    out.sort_by_key(|(n, _)| *n);
    out
}

/// Paths (0 = function/body, 1 = argument) to every redex, in pre-order,
/// which is left-to-right order of the redexes in the linear syntax.
pub fn redex_paths(m: &Term) -> Vec<Vec<u8>> {
    fn go(m: &Term, path: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        match m {
            Term::Var(_) => {}
            Term::Abs(_, b) => {
                path.push(0);
                go(b, path, out);
                path.pop();
            }
            Term::App(f, a) => {
                if naive_is_abs(f) {
                    out.push(path.clone());
                }
                path.push(0);
                go(f, path, out);
                path.pop();
                path.push(1);
                go(a, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut out);
    out
}

/// Contract the redex found at `path`.
pub fn contract_path(m: &Term, path: &[u8], contract: &dyn Fn(&Term, Var, &Term) -> Term) -> Term {
    match (m, path.split_first()) {
        (Term::App(f, a), None) => match f.as_ref() {
            Term::Abs(x, body) => contract(body, *x, a),
            _ => panic!("no redex at path"),
        },
        (Term::Abs(x, b), Some((0, rest))) => {
            Term::Abs(*x, Box::new(contract_path(b, rest, contract)))
        }
        (Term::App(f, a), Some((0, rest))) => {
            Term::app(contract_path(f, rest, contract), (**a).clone())
        }
        (Term::App(f, a), Some((1, rest))) => {
            Term::app((**f).clone(), contract_path(a, rest, contract))
        }
        _ => panic!("bad redex path"),
    }
}

/// Stoughton substitution restated directly: used as the contraction in the
/// path-based oracles so their results are comparable syntactically.
pub fn stoughton_single(body: &Term, x: Var, arg: &Term) -> Term {
    body.subst_single(x, arg)
}

/// Replay a list of beta indices by locating redexes through paths.
/// Returns `None` if some index has no redex.
pub fn naive_replay(start: &Term, indices: &[usize]) -> Option<Term> {
    let mut cur = start.clone();
    for &n in indices {
        let paths = redex_paths(&cur);
        let path = paths.get(n)?;
        cur = contract_path(&cur, path, &stoughton_single);
    }
    Some(cur)
}

/// Every standard sequence (as index lists) from `m` of at most `depth` beta
/// steps whose end is syntactically `target`.
pub fn brute_force_standard(m: &Term, target: &Term, depth: usize) -> Vec<Vec<usize>> {
    fn go(
        cur: &Term,
        floor: usize,
        left: usize,
        target: &Term,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur == target {
            out.push(acc.clone());
        }
        if left == 0 {
            return;
        }
        let paths = redex_paths(cur);
        for (n, path) in paths.iter().enumerate().skip(floor) {
            let next = contract_path(cur, path, &stoughton_single);
            acc.push(n);
            go(&next, n, left - 1, target, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(m, 0, depth, target, &mut Vec::new(), &mut out);
    out
}
