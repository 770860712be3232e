use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hankel::{hankel_reports, HankelReport, HankelSource};
use super::CheckResult;
use crate::error::{Error, Result};

/// `Gamma_j = D_j D_{j+2n+2} - D_{j+1} D_{j+2n+1} + D_{j+n+1}^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleRobinsonResidual {
    pub j: usize,
    pub value: BigInt,
}

fn antiperiod(n: usize) -> usize {
    2 * n * (n + 1)
}

fn signed(v: &BigInt, negate: bool) -> BigInt {
    if negate {
        -v
    } else {
        v.clone()
    }
}

/// Values in `{-1, 0, 1}` and `D_{j+P} = (-1)^n D_j` with `P = 2n(n+1)`,
/// over the whole slice.
pub fn value_set_and_periodicity_on(values: &[BigInt], n: usize, name: &str) -> CheckResult {
    if let Some((j, v)) = values.iter().enumerate().find(|(_, v)| v.magnitude() > &One::one()) {
        return CheckResult::failed(name, j, "-1, 0 or 1", v);
    }
    let p = antiperiod(n);
    for j in 0..values.len().saturating_sub(p) {
        let want = signed(&values[j], n % 2 == 1);
        if values[j + p] != want {
            return CheckResult::failed(name, j + p, want, &values[j + p]);
        }
    }
    CheckResult::passed(name)
}

/// `Gamma_j` for every `j < count` with `j + 2n + 2` inside the slice.
pub fn gale_robinson_on(values: &[BigInt], n: usize, count: usize) -> Vec<GaleRobinsonResidual> {
    let reach = 2 * n + 2;
    (0..count)
        .take_while(|j| j + reach < values.len())
        .map(|j| {
            let d = |i: usize| &values[j + i];
            let value = d(0) * d(reach) - d(1) * d(reach - 1) + d(n + 1) * d(n + 1);
            GaleRobinsonResidual { j, value }
        })
        .collect()
}

/// Passes iff every residual vanishes.
pub fn residuals_check(name: &str, residuals: &[GaleRobinsonResidual]) -> CheckResult {
    match residuals.iter().find(|r| !r.value.is_zero()) {
        Some(r) => CheckResult::failed(name, r.j, 0, &r.value),
        None => CheckResult::passed(name),
    }
}

/// `D^{(l+1)}_j = (-1)^{j + n(n+2l-1)/2} D^{(l)}_{j+n+1}` for `j <= horizon`.
/// `lower` needs `horizon + n + 2` entries and `upper` `horizon + 1`.
pub fn contiguity_on(lower: &[BigInt], upper: &[BigInt], n: usize, l: usize, horizon: usize, name: &str) -> CheckResult {
    let base = n * (n + 2 * l - 1) / 2;
    for j in 0..=horizon {
        let (Some(got), Some(src)) = (upper.get(j), lower.get(j + n + 1)) else {
            return CheckResult::failed(name, j, "value in range", "missing");
        };
        let want = signed(src, (j + base) % 2 == 1);
        if *got != want {
            return CheckResult::failed(name, j, want, got);
        }
    }
    CheckResult::passed(name)
}

/// Value set and (anti)periodicity of `D^{(l)}` over `periods` (anti)periods.
pub fn check_value_set_and_periodicity(n: usize, l: usize, periods: usize, source: HankelSource) -> Result<CheckResult> {
    if periods == 0 {
        return Err(Error::InvalidArgument("at least one period is needed".into()));
    }
    let r = super::hankel_sequence(n, l, periods * antiperiod(n), source)?;
    Ok(first_failure(&r).unwrap_or_else(|| value_set_and_periodicity_on(&r.values, n, "value_set_and_periodicity")))
}

/// All residuals `Gamma_j^{(l)}` for `j < horizon`.
pub fn check_gale_robinson(n: usize, l: usize, horizon: usize, source: HankelSource) -> Result<Vec<GaleRobinsonResidual>> {
    let r = super::hankel_sequence(n, l, horizon + 2 * n + 2, source)?;
    if let Some(bad) = first_failure(&r) {
        return Err(Error::InvalidArgument(format!("Hankel sources disagree: {bad}")));
    }
    Ok(gale_robinson_on(&r.values, n, horizon))
}

/// The contiguity identity between shifts `l` and `l + 1`, `l <= n`.
pub fn check_contiguity(n: usize, l: usize, horizon: usize, source: HankelSource) -> Result<CheckResult> {
    if l > n {
        return Err(Error::InvalidArgument(format!("contiguity needs l <= n, got l = {l}, n = {n}")));
    }
    let rs = hankel_reports(n, &[l, l + 1], horizon + n + 2, source)?;
    if let Some(bad) = rs.iter().find_map(first_failure) {
        return Ok(bad);
    }
    Ok(contiguity_on(&rs[0].values, &rs[1].values, n, l, horizon, "contiguity"))
}

fn first_failure(r: &HankelReport) -> Option<CheckResult> {
    r.checks.iter().find(|c| !c.pass).cloned()
}

/// Hankel sequences of every shift `0 <= l <= n + 1`, long enough for two
/// (anti)periods, the Gale-Robinson window and the contiguity window.
#[derive(Clone, Debug)]
pub struct ShiftTables {
    pub n: usize,
    pub reports: Vec<HankelReport>,
}

impl ShiftTables {
    pub fn horizon(n: usize) -> usize {
        2 * antiperiod(n) + n + 2
    }

    pub fn new(n: usize, source: HankelSource) -> Result<Self> {
        let ells: Vec<usize> = (0..=n + 1).collect();
        Ok(ShiftTables { n, reports: hankel_reports(n, &ells, Self::horizon(n), source)? })
    }

    pub fn values(&self, l: usize) -> &[BigInt] {
        &self.reports[l].values
    }

    /// Formula against brute force, when both were computed.
    pub fn agreement(&self) -> Vec<CheckResult> {
        self.reports
            .iter()
            .flat_map(|r| r.checks.iter().map(move |c| tag(c.clone(), r.n, r.ell)))
            .collect()
    }

    pub fn periodicity(&self) -> Vec<CheckResult> {
        let window = 2 * antiperiod(self.n);
        self.reports
            .iter()
            .map(|r| tag(value_set_and_periodicity_on(&r.values[..window], self.n, "value_set_and_periodicity"), self.n, r.ell))
            .collect()
    }

    pub fn gale_robinson(&self) -> Vec<CheckResult> {
        self.reports
            .iter()
            .map(|r| {
                let res = gale_robinson_on(&r.values, self.n, antiperiod(self.n));
                let check = if res.len() < antiperiod(self.n) {
                    CheckResult::failed("gale_robinson", res.len(), "value in range", "missing")
                } else {
                    residuals_check("gale_robinson", &res)
                };
                tag(check, self.n, r.ell)
            })
            .collect()
    }

    pub fn contiguity(&self) -> Vec<CheckResult> {
        let n = self.n;
        (0..=n)
            .map(|l| tag(contiguity_on(self.values(l), self.values(l + 1), n, l, 2 * antiperiod(n), "contiguity"), n, l))
            .collect()
    }
}

fn tag(mut c: CheckResult, n: usize, l: usize) -> CheckResult {
    c.name = format!("{}[n={n},l={l}]", c.name);
    c
}
