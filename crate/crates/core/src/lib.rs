//! A standardization engine for the untyped lambda calculus.
//!
//! Terms use one sort of natural-number names for free and bound variables
//! and are not identified up to alpha. Substitution is Stoughton's multiple
//! substitution, which renames every binder it crosses with a deterministic
//! choice of fresh name.
//!
//! The main pipeline takes a beta-reduction trace (steps at explicit redex
//! positions, with explicit alpha steps), builds a standard-reduction
//! derivation for it, and reads that derivation back as a standard
//! sequence: one whose contracted redex positions never decrease. When the
//! trace ends in a normal form the standard sequence contracts only redex 0,
//! which is the leftmost reduction theorem.
//!
//! ```
//! use lamstd::{parse_term, standardize, contract_at, ReductionTrace};
//!
//! let m = parse_term("(\\x0. x1) ((\\x2. x2) x3)").unwrap();
//! let mid = contract_at(&m, 1).unwrap();
//! let mut trace = ReductionTrace::empty(m);
//! trace.push_beta(1, mid.clone());
//! trace.push_beta(0, contract_at(&mid, 0).unwrap());
//!
//! let seq = standardize(&trace).unwrap();
//! assert_eq!(seq.beta_indices(), vec![0]);
//! assert_eq!(seq.end().to_string(), "x1");
//! ```

pub mod alpha;
pub mod beta;
pub mod cli;
pub mod derivation;
pub mod document;
pub mod error;
pub mod oracle;
pub mod sequence;
pub mod strategies;
pub mod subst;
pub mod syntax;
pub mod term;

pub use alpha::{alpha_eq, AlphaVerdict};
pub use beta::{contract_at, successors, validate_trace, RedexIndex, ReductionTrace, TraceStep};
pub use derivation::{certify_derivation, trace_to_std, StdDerivation, SubstDerivation};
pub use document::TraceDocument;
pub use error::{Error, Result};
pub use sequence::{leftmost_from_trace, standardize, validate_standard, StandardSequence};
pub use strategies::{hap_step, leftmost_step, normalize_leftmost, HapTrace, NormalizeOutcome};
pub use subst::{Restriction, Substitution};
pub use syntax::{parse_term, print_term};
pub use term::{Term, Var};
