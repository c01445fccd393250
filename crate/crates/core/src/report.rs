//! Check reports: per-identity violation counts with capped witness lists.

use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::exact::Rational;

pub const DEFAULT_MAX_WITNESSES: usize = 16;

static MAX_WITNESSES: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_WITNESSES);

/// Sets the number of witnesses stored per report (process-wide).
pub fn set_max_witnesses(n: usize) {
    MAX_WITNESSES.store(n, Ordering::Relaxed);
}

pub fn max_witnesses() -> usize {
    MAX_WITNESSES.load(Ordering::Relaxed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub residual: Vec<Rational>,
}

/// Outcome of evaluating one identity family.
///
/// `violations` counts every failing tuple; `witnesses` keeps at most
/// [`max_witnesses`] of them. Informational reports never affect the
/// overall verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub axiom_id: String,
    pub checked: usize,
    pub violations: usize,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

impl CheckReport {
    pub fn new(axiom_id: impl Into<String>) -> Self {
        CheckReport {
            axiom_id: axiom_id.into(),
            checked: 0,
            violations: 0,
            witnesses: Vec::new(),
            informational: false,
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    /// Records one evaluated tuple; a nonzero residual counts as a violation.
    pub fn record(&mut self, tuple: &[usize], residual: &[Rational]) {
        self.checked += 1;
        if residual.iter().any(|x| !x.is_zero()) {
            self.violation(tuple, residual.to_vec());
        }
    }

    /// Records a violation without a corresponding successful-case count.
    pub fn violation(&mut self, tuple: &[usize], residual: Vec<Rational>) {
        self.violations += 1;
        if self.witnesses.len() < max_witnesses() {
            self.witnesses.push(Witness { tuple: tuple.to_vec(), residual });
        }
    }

    pub fn holds(&self) -> bool {
        self.violations == 0
    }

    pub fn with_suffix(mut self, suffix: &str) -> Self {
        self.axiom_id.push_str(suffix);
        self
    }
}

/// True when every non-informational report holds.
pub fn all_hold(reports: &[CheckReport]) -> bool {
    reports.iter().filter(|r| !r.informational).all(CheckReport::holds)
}

/// Comma-separated ids of failing non-informational reports.
pub fn failing_ids(reports: &[CheckReport]) -> String {
    reports
        .iter()
        .filter(|r| !r.informational && !r.holds())
        .map(|r| r.axiom_id.as_str())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Calls `f` on every tuple in `[0, dim)^arity`, in lexicographic order.
pub fn for_each_tuple(dim: usize, arity: usize, mut f: impl FnMut(&[usize])) {
    if dim == 0 && arity > 0 {
        return;
    }
    let mut t = vec![0; arity];
    loop {
        f(&t);
        let mut k = arity;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            t[k] += 1;
            if t[k] < dim {
                break;
            }
            t[k] = 0;
        }
    }
}
