//! Executable checks of the walk-length bounds, the Krebs-Verbitsky claim
//! ladder, and the Monte-Carlo experiments.

mod bounds;
mod recurrences;
mod suites;
mod trials;

use serde::Serialize;

use crate::{Error, Result};

pub use crate::graph::derive_seed;
pub use bounds::{part3_parameters, verify_krebs_verbitsky, verify_part3_bound, verify_pn_yn};
pub use recurrences::{
    extend_check, part1_property, recurrence_witness, Part1Report, RecurrenceWitness,
};
pub use suites::{construction_suite, lemma_suite, oracle_suite, SuiteReport};
pub use trials::{
    random_tree_ambivalence_trial, random_triple_trial, rate_curve, rate_curve_csv, run_trials,
    tree_has_ambivalent_pair, triple_collision, TrialReport, EXACT_TREE_N,
};

/// One named assertion inside a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Where two profiles stop agreeing, against the predicted thresholds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub family: String,
    pub n: usize,
    /// Largest `k` such that the profiles agree on `0..=k`.
    pub agree_through: usize,
    pub first_difference: Option<usize>,
    pub predicted_agree: Option<usize>,
    pub predicted_differ: Option<usize>,
    pub checks: Vec<Check>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Turns failed checks into a theorem-violation error.
    pub fn ensure(&self) -> Result<&Self> {
        if self.passed() {
            return Ok(self);
        }
        let failed: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{} ({})", c.name, c.detail))
            .collect();
        Err(Error::TheoremViolation(format!(
            "{} n={}: {}",
            self.family,
            self.n,
            failed.join("; ")
        )))
    }
}
