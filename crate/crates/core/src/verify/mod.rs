//! Exhaustive and sampled verification suites.
//!
//! Each suite returns a [`VerificationReport`]; a suite passes when its
//! violation list is empty. Work over an enumeration range is split into
//! contiguous chunks, one per worker thread, each with its own solver and
//! memo cache; results are merged in range order so reports do not depend on
//! the number of workers.

mod conjectures;
mod euler_checks;
mod extremal;
mod identities;

pub mod enumerate;
pub mod predicates;

use std::ops::Range;
use std::time::Instant;

use serde::Serialize;

use crate::format::to_graph6;
use crate::graph::Graph;

pub use conjectures::{run_conjecture_suite, ConjectureReport};
pub use euler_checks::{check_euler_identities, check_orbit_laws, check_word_corpus};
pub use extremal::{check_trees, run_extremal_suite};
pub use identities::{
    check_graph_identities, check_pivot_lemma, check_substitution_calculus, run_identity_suite,
};

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// graph6 encoding of the offending graph (for word instances, of the
    /// word's interlace graph).
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_max: usize,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Appends another report's instances and violations.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        self.elapsed_ms += other.elapsed_ms;
    }
}

/// Accumulates checks for one chunk of work.
#[derive(Default)]
pub(crate) struct Tally {
    pub checked: u64,
    pub violations: Vec<Violation>,
}

impl Tally {
    pub fn fail(&mut self, g: &Graph, detail: impl Into<String>) {
        self.violations.push(Violation {
            graph6: to_graph6(g),
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, ok: bool, g: &Graph, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(g, detail());
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }

    pub fn into_report(self, suite: &str, n_max: usize, seed: u64, start: Instant) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            n_max,
            checked: self.checked,
            violations: self.violations,
            seed,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// Number of worker threads used by the suites.
pub fn worker_count() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs `f` on contiguous chunks of `range`, one per worker, and returns the
/// results in range order.
pub(crate) fn in_chunks<T, F>(range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync,
{
    let len = range.end - range.start;
    let workers = (worker_count() as u64).clamp(1, len.max(1));
    if workers == 1 {
        return vec![f(range)];
    }
    let step = len.div_ceil(workers);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|i| {
                let lo = range.start + i * step;
                let hi = (lo + step).min(range.end);
                let f = &f;
                s.spawn(move || f(lo..hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Evaluates nonnegative coefficients at a small integer.
pub(crate) fn eval(c: &[u64], x: i128) -> i128 {
    c.iter().rev().fold(0i128, |acc, &a| acc * x + a as i128)
}

pub(crate) fn degree(c: &[u64]) -> usize {
    c.iter().rposition(|&a| a != 0).unwrap_or(0)
}

pub(crate) fn lowest_degree(c: &[u64]) -> usize {
    c.iter().position(|&a| a != 0).unwrap_or(0)
}

pub(crate) fn render(c: &[u64]) -> String {
    crate::poly::IntPolynomial::from_u64s(c).to_string()
}

/// `F_0 = 0, F_1 = 1, ...`
pub(crate) fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}
