use std::fmt;
use std::str::FromStr;
use std::thread;

use num_bigint::BigInt;

use super::CheckResult;
use crate::algebra::{Coeff, CoeffDomain, ExactMatrix, TruncatedSeries};
use crate::error::{Error, Result};
use crate::hfrac::{dropped_terms, hankel_values, hfraction_of_shift};
use crate::qseries::metallic_series;

/// Where Hankel values come from: the H-fraction product formula, the
/// determinants themselves, or both compared entry by entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HankelSource {
    Formula,
    BruteForce,
    Both,
}

impl HankelSource {
    pub fn as_str(self) -> &'static str {
        match self {
            HankelSource::Formula => "formula",
            HankelSource::BruteForce => "brute_force",
            HankelSource::Both => "both",
        }
    }

    fn wants_formula(self) -> bool {
        self != HankelSource::BruteForce
    }

    fn wants_brute(self) -> bool {
        self != HankelSource::Formula
    }
}

impl fmt::Display for HankelSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HankelSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(HankelSource::Formula),
            "brute" | "brute_force" | "brute-force" => Ok(HankelSource::BruteForce),
            "both" => Ok(HankelSource::Both),
            _ => Err(Error::InvalidArgument(format!("unknown Hankel source {s:?}"))),
        }
    }
}

/// `Delta_0^{(l)} .. Delta_{horizon-1}^{(l)}` of the q-metallic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelReport {
    pub n: usize,
    pub ell: usize,
    pub horizon: usize,
    pub values: Vec<BigInt>,
    pub source: HankelSource,
    pub checks: Vec<CheckResult>,
}

impl HankelReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// `det (f_{a+b+l})_{0 <= a, b < j}`; 1 for `j = 0`.
pub fn hankel_bruteforce<C: Coeff>(f: &TruncatedSeries<C>, l: usize, j: usize) -> Result<C> {
    if j == 0 {
        return Ok(C::one(f.domain()));
    }
    let needed = l + 2 * j - 1;
    if f.precision() < needed {
        return Err(Error::Precision { needed, available: f.precision() });
    }
    Ok(ExactMatrix::hankel(f.coeffs(), l, j)?.det_fraction_free())
}

/// `Delta_0^{(l)} .. Delta_{horizon-1}^{(l)}` of `f` from the leading minors of
/// one Hankel matrix.
pub fn bruteforce_sequence<C: Coeff>(f: &TruncatedSeries<C>, l: usize, horizon: usize) -> Result<Vec<C>> {
    if horizon == 0 {
        return Ok(Vec::new());
    }
    let dim = horizon - 1;
    let needed = if dim == 0 { 0 } else { l + 2 * dim - 1 };
    if f.precision() < needed {
        return Err(Error::Precision { needed, available: f.precision() });
    }
    if dim == 0 {
        return Ok(vec![C::one(f.domain())]);
    }
    Ok(ExactMatrix::hankel(f.coeffs(), l, dim)?.leading_minors())
}

/// The same values read off the closed-form H-fraction of the shifted
/// series; needs `l <= n + 1`.
pub fn formula_sequence(n: usize, l: usize, horizon: usize) -> Result<Vec<BigInt>> {
    let h = hfraction_of_shift::<BigInt>(CoeffDomain::Integers, n, l)?;
    hankel_values(&h, horizon)
}

/// One report for a single shift.
pub fn hankel_sequence(n: usize, l: usize, horizon: usize, source: HankelSource) -> Result<HankelReport> {
    Ok(hankel_reports(n, &[l], horizon, source)?.pop().expect("one shift requested"))
}

/// Reports for several shifts of the same series. The series is expanded
/// once to the precision the largest shift needs, and each shift runs on
/// its own thread.
pub fn hankel_reports(n: usize, ells: &[usize], horizon: usize, source: HankelSource) -> Result<Vec<HankelReport>> {
    if horizon == 0 {
        if source.wants_formula() {
            for &l in ells {
                dropped_terms(n, l)?;
            }
        }
        return Ok(ells
            .iter()
            .map(|&l| HankelReport { n, ell: l, horizon, values: Vec::new(), source, checks: Vec::new() })
            .collect());
    }
    let series = if source.wants_brute() {
        let max_l = ells.iter().copied().max().unwrap_or(0);
        Some(metallic_series(n, max_l + 2 * horizon)?)
    } else {
        None
    };
    let series = series.as_ref();
    thread::scope(|scope| {
        let jobs: Vec<_> = ells
            .iter()
            .map(|&l| scope.spawn(move || one_report(n, l, horizon, source, series)))
            .collect();
        jobs.into_iter().map(|j| j.join().expect("Hankel worker panicked")).collect()
    })
}

fn one_report(
    n: usize,
    l: usize,
    horizon: usize,
    source: HankelSource,
    series: Option<&TruncatedSeries<BigInt>>,
) -> Result<HankelReport> {
    let formula = if source.wants_formula() { Some(formula_sequence(n, l, horizon)?) } else { None };
    let brute = match series {
        Some(f) => Some(bruteforce_sequence(f, l, horizon)?),
        None => None,
    };
    let mut checks = Vec::new();
    let values = match (formula, brute) {
        (Some(a), Some(b)) => {
            checks.push(CheckResult::compare(
                "formula_equals_brute_force",
                a.iter().zip(&b).enumerate().map(|(j, (x, y))| (j, x, y)),
            ));
            b
        }
        (Some(v), None) | (None, Some(v)) => v,
        (None, None) => unreachable!("every source computes something"),
    };
    Ok(HankelReport { n, ell: l, horizon, values, source, checks })
}
