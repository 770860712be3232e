use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::explicit::{explicit_first_period, support_membership, symmetry_check};
use super::hankel::HankelSource;
use super::theorems::ShiftTables;
use super::{baseline_catalan_motzkin, symmetry_suite, CheckResult};
use crate::algebra::{BigRational, CoeffDomain};
use crate::error::{Error, Result};
use crate::hfrac::{
    default_max_steps, expected_hfraction, hfraction_of_shift, hfraction_of_shift_by_algorithm, metallic_hfraction,
};

/// Named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Algorithm Q against the closed-form fractions, shifts included.
    HFraction,
    /// Values in `{-1, 0, 1}` and (anti)periodicity.
    Periodicity,
    /// The Gale-Robinson recurrence.
    GaleRobinson,
    /// Contiguity between consecutive shifts.
    Contiguity,
    /// Closed-form values, reflection symmetry and support.
    Explicit,
    /// Symmetries of the fraction and its profile.
    Symmetries,
    /// Catalan and Motzkin.
    Baselines,
    All,
}

impl Suite {
    pub const NAMES: [(&'static str, Suite); 8] = [
        ("hfraction", Suite::HFraction),
        ("periodicity", Suite::Periodicity),
        ("gale-robinson", Suite::GaleRobinson),
        ("contiguity", Suite::Contiguity),
        ("explicit", Suite::Explicit),
        ("symmetries", Suite::Symmetries),
        ("baselines", Suite::Baselines),
        ("all", Suite::All),
    ];

    /// Short identifiers accepted on input besides [`Suite::NAMES`].
    pub const ALIASES: [(&'static str, Suite); 5] = [
        ("thmA", Suite::HFraction),
        ("thmB", Suite::Periodicity),
        ("thmC", Suite::GaleRobinson),
        ("thmD", Suite::Contiguity),
        ("thm51", Suite::Explicit),
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES.iter().find(|(_, s)| *s == self).expect("every suite is named").0
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::NAMES
            .iter()
            .chain(&Self::ALIASES)
            .find(|(name, _)| name.eq_ignore_ascii_case(s))
            .map(|(_, suite)| *suite)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

fn tagged(mut c: CheckResult, n: usize) -> CheckResult {
    c.name = format!("{}[n={n}]", c.name);
    c
}

fn fraction_checks(n: usize) -> Result<Vec<CheckResult>> {
    let found = metallic_hfraction(n)?;
    let want = expected_hfraction::<BigRational>(CoeffDomain::Rationals, n)?;
    let mut out = Vec::new();
    let len = found.offset() + found.period().max(want.period());
    out.push(match (0..len).find(|&j| found.term(j) != want.term(j)) {
        None => CheckResult::passed("hfraction_matches_template"),
        Some(j) => CheckResult::failed("hfraction_matches_template", j, fmt_term(want.term(j)), fmt_term(found.term(j))),
    });
    let period = match n {
        1 => 3,
        2 => 8,
        _ => 6 * n - 4,
    };
    out.push(if found.period() == period && found.offset() == 1 {
        CheckResult::passed("cycle_length_and_offset")
    } else {
        CheckResult::failed(
            "cycle_length_and_offset",
            0,
            format!("period {period}, offset 1"),
            format!("period {}, offset {}", found.period(), found.offset()),
        )
    });
    for l in 0..=n + 1 {
        let closed = hfraction_of_shift::<BigRational>(CoeffDomain::Rationals, n, l)?;
        let direct = hfraction_of_shift_by_algorithm(CoeffDomain::Rationals, n, l, default_max_steps(n), |c| {
            BigRational::from_integer(c.clone())
        })?;
        let name = format!("shift_rule[l={l}]");
        let len = closed.offset() + closed.period().max(direct.period());
        out.push(match (0..len).find(|&j| closed.term(j) != direct.term(j)) {
            None if closed == direct => CheckResult::passed(name),
            None => CheckResult::failed(name, len, "same fraction", "different period"),
            Some(j) => CheckResult::failed(name, j, fmt_term(closed.term(j)), fmt_term(direct.term(j))),
        });
    }
    Ok(out.into_iter().map(|c| tagged(c, n)).collect())
}

fn fmt_term(t: Option<&crate::cfrac::HTerm<BigRational>>) -> String {
    match t {
        Some(t) => format!("k={} a={} D={}", t.k, t.a, t.d),
        None => "end of fraction".into(),
    }
}

fn explicit_checks(n: usize, delta: &[BigInt]) -> Result<Vec<CheckResult>> {
    let period = 2 * n * (n + 1);
    let rebuilt: Vec<BigInt> = explicit_first_period(n)?.into_iter().map(BigInt::from).collect();
    let mut out = vec![CheckResult::compare(
        "closed_form_values",
        rebuilt.iter().zip(&delta[..period]).enumerate().map(|(j, (w, g))| (j, w, g)),
    )];
    out.push(symmetry_check(delta, n));
    let mut support = CheckResult::passed("support_conditions");
    for j in 0..=2 * n * (n + 2) + 1 {
        let m = support_membership(n, j)?;
        let nonzero = delta[j] != BigInt::from(0);
        if m.member != nonzero {
            support = CheckResult::failed("support_conditions", j, m.member, nonzero);
            break;
        }
    }
    out.push(support);
    Ok(out.into_iter().map(|c| tagged(c, n)).collect())
}

/// Runs `suite` for every `n` in `ns`. Hankel tables are built once per
/// `n` and shared by the suites that need them.
pub fn run_suite(suite: Suite, ns: &[usize], source: HankelSource) -> Result<Vec<CheckResult>> {
    if ns.contains(&0) {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let mut out = Vec::new();
    for &n in ns {
        if suite.includes(Suite::HFraction) {
            out.extend(fraction_checks(n)?);
        }
        let needs_tables = [Suite::Periodicity, Suite::GaleRobinson, Suite::Contiguity]
            .iter()
            .any(|&s| suite.includes(s))
            || (suite.includes(Suite::Explicit) && n >= 3);
        if needs_tables {
            let t = ShiftTables::new(n, source)?;
            let wants_theorems = suite.includes(Suite::Periodicity) || suite.includes(Suite::GaleRobinson) || suite.includes(Suite::Contiguity);
            if wants_theorems {
                out.extend(t.agreement());
            }
            if suite.includes(Suite::Periodicity) {
                out.extend(t.periodicity());
            }
            if suite.includes(Suite::GaleRobinson) {
                out.extend(t.gale_robinson());
            }
            if suite.includes(Suite::Contiguity) {
                out.extend(t.contiguity());
            }
            if suite.includes(Suite::Explicit) && n >= 3 {
                out.extend(explicit_checks(n, t.values(0))?);
            }
        }
        if suite.includes(Suite::Symmetries) && n >= 3 {
            let h = metallic_hfraction(n)?;
            out.extend(symmetry_suite(n, &h)?.into_iter().map(|c| tagged(c, n)));
        }
    }
    if suite.includes(Suite::Baselines) {
        out.extend(baseline_catalan_motzkin()?);
    }
    Ok(out)
}
