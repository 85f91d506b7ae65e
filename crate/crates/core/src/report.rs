//! Pass/fail records produced by the verification suites.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one named check at one weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub weight: u32,
    pub status: Status,
    /// Number of basis elements (or pairs) examined.
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub outcomes: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.passed())
    }

    pub fn extend(&mut self, other: Report) {
        self.outcomes.extend(other.outcomes);
    }

    pub fn get(&self, check: &str) -> impl Iterator<Item = &CheckOutcome> {
        let check = check.to_string();
        self.outcomes.iter().filter(move |o| o.check == check)
    }
}

/// Runs `test` on each case and records the first failure, if any.
///
/// Cases are examined in parallel; the reported counterexample is the first
/// failing case in input order, so the result does not depend on scheduling.
pub(crate) fn run_check<T, F>(check: &str, weight: u32, cases: &[T], test: F) -> CheckOutcome
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync,
{
    use rayon::prelude::*;
    let counterexample = cases.par_iter().map(&test).find_map_first(|r| r);
    CheckOutcome {
        check: check.to_string(),
        weight,
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        cases: cases.len(),
        counterexample,
    }
}
