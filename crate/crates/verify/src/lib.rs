//! Shared plumbing for the acceptance suite: bundled corpus access and
//! per-criterion outcome reporting.

use std::time::{Duration, Instant};

use lya_cli::corpus;
use lya_core::compat::{is_compatible, CompatRepresentation, CompatibleLy};
use lya_core::io;
use lya_core::lya::LyAlgebra;
use lya_core::rep::Representation;

/// Result of one criterion.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {}: {} [{:.2}s] {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// Collects findings for one criterion; any `fail` makes it FAIL.
#[derive(Debug, Default)]
pub struct Findings {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Findings {
    pub fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    pub fn fail(&mut self, what: impl Into<String>) {
        self.failures.push(what.into());
    }

    pub fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn failures(&self) -> &[String] {
        &self.failures
    }
}

/// Runs `body`, then applies an optional wall-clock budget.
pub fn run_criterion(id: usize, title: &'static str, budget: Option<Duration>, body: impl FnOnce(&mut Findings)) -> Outcome {
    let start = Instant::now();
    let mut f = Findings::default();
    body(&mut f);
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        f.check(elapsed < b, format!("runtime {:.2}s exceeds budget {:.2}s", elapsed.as_secs_f64(), b.as_secs_f64()));
    }
    let mut detail = String::new();
    if !f.failures.is_empty() {
        let shown: Vec<&str> = f.failures.iter().take(4).map(String::as_str).collect();
        detail.push_str(&format!("failures({}): {}", f.failures.len(), shown.join("; ")));
    }
    if !f.notes.is_empty() {
        if !detail.is_empty() {
            detail.push_str(" | ");
        }
        detail.push_str(&f.notes.join("; "));
    }
    Outcome { id, title, passed: f.passed(), detail, elapsed }
}

fn of_kind(kind: &str) -> impl Iterator<Item = &'static corpus::Entry> + '_ {
    corpus::entries().iter().filter(move |e| e.kind == kind)
}

/// Single-algebra corpus files.
pub fn algebras() -> Vec<(String, LyAlgebra)> {
    of_kind("algebra").map(|e| (e.name.clone(), io::parse_algebra(e.text).expect("bundled algebra parses"))).collect()
}

/// Every pair file in the corpus, compatible or not.
pub fn pair_files() -> Vec<(String, CompatibleLy)> {
    of_kind("compatible")
        .map(|e| (e.name.clone(), io::parse_compatible(e.text).expect("bundled pair parses")))
        .collect()
}

/// Pair files whose structures pass `check_compatible`, and the names of those that do not.
pub fn compatible_pairs() -> (Vec<(String, CompatibleLy)>, Vec<String>) {
    let (ok, bad): (Vec<_>, Vec<_>) = pair_files().into_iter().partition(|(_, c)| is_compatible(c));
    (ok, bad.into_iter().map(|(n, _)| n).collect())
}

pub fn representations() -> Vec<(String, LyAlgebra, Representation)> {
    of_kind("representation")
        .map(|e| {
            let (a, r) = io::parse_representation(e.text).expect("bundled representation parses");
            (e.name.clone(), a, r)
        })
        .collect()
}

pub fn compat_representations() -> Vec<(String, CompatibleLy, CompatRepresentation)> {
    of_kind("compat-representation")
        .map(|e| {
            let (c, r) = io::parse_compat_representation(e.text).expect("bundled representation parses");
            (e.name.clone(), c, r)
        })
        .collect()
}

/// Runs the command-line tool in-process; returns the exit code and the
/// parsed output records.
pub fn cli(args: &[&str]) -> (i32, Vec<serde_json::Value>) {
    let argv: Vec<String> = std::iter::once("lya").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = lya_cli::run_with(&argv, &mut out, &mut err);
    let records = String::from_utf8(out)
        .expect("utf-8 output")
        .lines()
        .map(|l| serde_json::from_str(l).expect("records are JSON"))
        .collect();
    (code, records)
}
