//! The bundled acceptance corpus: every worked example and family sweep with its
//! predicted outcomes, checked end to end.

use std::sync::Arc;

use serde::Serialize;

use crate::divisor::{analyze, gradient_ideal, is_free, AnalyzeOptions, DivisorReport};
use crate::error::{Error, Result};
use crate::families::{named_example, FamilyMember};
use crate::groebner::Ideal;
use crate::modsyz::{minimal_free_resolution, BettiData, Column, Grading};
use crate::poly::{parse_poly, Polynomial, Ring};

mod criteria;
mod properties;

pub use properties::{suite, SuiteCase};

#[derive(Clone, Copy, Debug)]
pub struct CorpusOptions {
    pub seed: u64,
    pub degree_cap: Option<u32>,
    pub gsc_budget: usize,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions { seed: 0, degree_cap: Some(30), gsc_budget: 8 }
    }
}

impl CorpusOptions {
    fn analyze(&self, rees: bool, extend_n: bool) -> AnalyzeOptions {
        AnalyzeOptions {
            rees,
            extend_n,
            gsc_budget: self.gsc_budget,
            seed: self.seed,
            degree_cap: self.degree_cap,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CriterionOutcome {
    /// One line: `[PASS] 3 arrangement ... (12/12 checks)`.
    pub fn summary(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let mut line = format!(
            "[{}] {:>2} {} ({ok}/{} checks)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks.len()
        );
        if let Some(e) = &self.error {
            line.push_str(&format!(" error: {e}"));
        }
        line
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Collects named pass/fail checks.
#[derive(Default)]
pub(crate) struct Checks(Vec<Check>);

impl Checks {
    pub(crate) fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) {
        let detail = (!passed).then(detail);
        self.0.push(Check { name: name.into(), passed, detail });
    }

    pub(crate) fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, computed: T, expected: T) {
        let passed = computed == expected;
        self.check(name, passed, || format!("computed {computed:?}, expected {expected:?}"));
    }
}

pub const CRITERIA: [(u32, &str); 13] = [
    (1, "conic plus transversal line: saturation and regularity"),
    (2, "four-line arrangement: resolution, saturation, linear type"),
    (3, "six-line arrangement: resolution, pivot, Cramer structure"),
    (4, "sextic family: saturation, Rees equations, syzygetic failure"),
    (5, "quintic-plus family sweep: freeness and linear type"),
    (6, "homogenized binary weighted homogeneous sweep"),
    (7, "cones over binary weighted homogeneous curves"),
    (8, "addition family: freeness and Fitting condition"),
    (9, "second addition family: freeness and syzygy shape"),
    (10, "weighted homogeneous discriminant and its homogenization"),
    (11, "Eulerian free divisor that is not of linear type"),
    (12, "low-degree irreducible curves and a line"),
    (13, "structural properties over the whole suite"),
];

/// Runs one criterion; errors become a failed outcome carrying the message.
pub fn run_criterion(id: u32, options: &CorpusOptions) -> CriterionOutcome {
    let title = CRITERIA.iter().find(|(i, _)| *i == id).map(|(_, t)| *t).unwrap_or("unknown criterion");
    let mut checks = Checks::default();
    let result = match id {
        1 => criteria::conic_line(&mut checks, options),
        2 => criteria::arr1(&mut checks, options),
        3 => criteria::arr2(&mut checks, options),
        4 => criteria::sextic(&mut checks, options),
        5 => criteria::quintic_sweep(&mut checks, options),
        6 => criteria::three_vars_sweep(&mut checks, options),
        7 => criteria::cone_sweep(&mut checks, options),
        8 => criteria::addition(&mut checks, options),
        9 => criteria::addition2(&mut checks, options),
        10 => criteria::discriminant(&mut checks, options),
        11 => criteria::eulerian(&mut checks, options),
        12 => criteria::low_degree(&mut checks, options),
        13 => properties::structural(&mut checks, options),
        _ => Err(Error::Precondition(format!("no criterion {id}"))),
    };
    let error = result.err().map(|e| e.to_string());
    let passed = error.is_none() && !checks.0.is_empty() && checks.0.iter().all(|c| c.passed);
    CriterionOutcome { id, title, passed, checks: checks.0, error }
}

/// Runs the selected criteria (all when `ids` is empty) in parallel; results are sorted by id.
pub fn run_corpus(ids: &[u32], options: &CorpusOptions) -> Vec<CriterionOutcome> {
    let selected: Vec<u32> =
        if ids.is_empty() { CRITERIA.iter().map(|(i, _)| *i).collect() } else { ids.to_vec() };
    let mut out: Vec<CriterionOutcome> = std::thread::scope(|s| {
        let handles: Vec<_> = selected.iter().map(|&id| s.spawn(move || run_criterion(id, options))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread panicked")).collect()
    });
    out.sort_by_key(|o| o.id);
    out
}

pub(crate) fn xyz() -> Arc<Ring> {
    Ring::degrevlex(["x", "y", "z"]).expect("valid ring")
}

pub(crate) fn poly(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    Ok(parse_poly(text, ring)?)
}

pub(crate) fn named(tag: &str) -> Result<FamilyMember> {
    named_example(tag)
}

pub(crate) fn report(f: &Polynomial, options: &CorpusOptions, rees: bool) -> Result<DivisorReport> {
    analyze(f, options.analyze(rees, false))
}

pub(crate) fn report_n(f: &Polynomial, options: &CorpusOptions, rees: bool) -> Result<DivisorReport> {
    analyze(f, options.analyze(rees, true))
}

pub(crate) fn betti_of(ideal: &Ideal) -> Result<BettiData> {
    Ok(minimal_free_resolution(ideal, &Grading::standard(ideal.ring()))?.betti())
}

/// `a = c b` for a nonzero rational `c`.
pub(crate) fn proportional(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let Some(k) = b.iter().position(|p| !p.is_zero()) else { return false };
    let (Some(ca), Some(cb)) = (a[k].leading_coefficient(), b[k].leading_coefficient()) else { return false };
    if a[k].leading_monomial() != b[k].leading_monomial() {
        return false;
    }
    let c = ca / cb;
    a.iter().zip(b).all(|(x, y)| *x == y.scale(&c))
}

pub(crate) fn annihilates(f: &Polynomial, col: &Column) -> bool {
    let mut acc = Polynomial::zero(f.ring());
    for (a, g) in col.iter().zip(f.gradient()) {
        acc = &acc + &(a * &g);
    }
    acc.is_zero()
}

pub(crate) fn free_verdict(f: &Polynomial) -> Result<crate::Verdict> {
    Ok(is_free(f)?.verdict)
}

pub(crate) fn gradient(f: &Polynomial) -> Result<Ideal> {
    gradient_ideal(f)
}
