//! Hankel determinant oracles and the mechanical checkers built on them.

mod baseline;
mod conjecture;
mod explicit;
mod hankel;
mod modp;
mod suite;
mod symmetries;
mod theorems;

pub use baseline::{baseline_catalan_motzkin, catalan_product, motzkin_somos_check};
pub use conjecture::{conjecture_scan, ConjectureReport, PeriodicityVerdict, EXPLORATORY};
pub use explicit::{
    explicit_delta, explicit_first_period, explicit_s, support_membership, symmetry_check, Membership,
    ResidueClass, SupportCondition,
};
pub use hankel::{
    bruteforce_sequence, formula_sequence, hankel_bruteforce, hankel_reports, hankel_sequence, HankelReport,
    HankelSource,
};
pub use suite::{run_suite, Suite};
pub use symmetries::{hfraction_symmetries, profile_identities, symmetry_suite};
pub use modp::{modp_analysis, reduced_shifted_model, ModpOutcome, ModpReport};
pub use theorems::{
    check_contiguity, check_gale_robinson, check_value_set_and_periodicity, contiguity_on, gale_robinson_on,
    residuals_check, value_set_and_periodicity_on, GaleRobinsonResidual, ShiftTables,
};

use std::fmt;

use num_bigint::BigInt;

/// First failing index of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub j: usize,
    pub expected: String,
    pub got: String,
}

/// Outcome of one named property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl CheckResult {
    pub fn passed(name: impl Into<String>) -> Self {
        CheckResult { name: name.into(), pass: true, counterexample: None }
    }

    pub fn failed(name: impl Into<String>, j: usize, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        CheckResult {
            name: name.into(),
            pass: false,
            counterexample: Some(Counterexample { j, expected: expected.to_string(), got: got.to_string() }),
        }
    }

    /// Passes iff every `(j, expected, got)` triple agrees; otherwise reports
    /// the first disagreement.
    pub fn compare<'a>(name: impl Into<String>, pairs: impl IntoIterator<Item = (usize, &'a BigInt, &'a BigInt)>) -> Self {
        let name = name.into();
        for (j, want, got) in pairs {
            if want != got {
                return CheckResult::failed(name, j, want, got);
            }
        }
        CheckResult::passed(name)
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: {}", self.name, if self.pass { "pass" } else { "FAIL" }),
            Some(c) => write!(f, "{}: FAIL at j = {} (expected {}, got {})", self.name, c.j, c.expected, c.got),
        }
    }
}
