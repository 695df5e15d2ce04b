//! Exhaustive breadth-first enumeration of beta traces.

use crate::alpha;
use crate::beta::{successors, ReductionTrace};
use crate::error::{Error, Result};
use crate::term::Term;

pub const DEFAULT_FRONTIER_CAP: usize = 100_000;

/// Environment variable overriding [`DEFAULT_FRONTIER_CAP`].
pub const FRONTIER_CAP_ENV: &str = "LAMSTD_FRONTIER_CAP";

pub fn frontier_cap_from_env() -> usize {
    std::env::var(FRONTIER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_FRONTIER_CAP)
}

/// Every trace of at most `depth` beta steps from `m`, shortest first and
/// lexicographic by index sequence within each length. No alpha steps are
/// inserted.
///
/// Fails with `ResourceLimit` once more than `cap` traces have been
/// generated.
pub fn enumerate_traces(m: &Term, depth: usize, cap: usize) -> Result<Vec<ReductionTrace>> {
    let mut out = Vec::new();
    let mut level = vec![ReductionTrace::empty(m.clone())];
    for d in 0..=depth {
        if out.len() + level.len() > cap {
            return Err(Error::ResourceLimit { cap });
        }
        if d == depth {
            out.extend(level);
            break;
        }
        let mut next = Vec::new();
        for t in &level {
            for (n, result) in successors(t.end()) {
                let mut child = t.clone();
                child.push_beta(n, result);
                next.push(child);
            }
            if out.len() + level.len() + next.len() > cap {
                return Err(Error::ResourceLimit { cap });
            }
        }
        out.extend(level);
        level = next;
    }
    Ok(out)
}

/// The first enumerated trace from `m` ending at `n`. Failing a syntactic
/// match, the first ending alpha-equivalent to `n`, with one alpha step
/// appended.
pub fn find_trace(m: &Term, n: &Term, depth: usize, cap: usize) -> Result<Option<ReductionTrace>> {
    let traces = enumerate_traces(m, depth, cap)?;
    if let Some(t) = traces.iter().find(|t| t.end() == n) {
        return Ok(Some(t.clone()));
    }
    Ok(traces
        .into_iter()
        .find(|t| alpha::equivalent(t.end(), n))
        .map(|mut t| {
            t.push_alpha(n.clone());
            t
        }))
}
