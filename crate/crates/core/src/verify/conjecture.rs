use num_bigint::BigInt;
use num_traits::Signed;

use super::hankel::bruteforce_sequence;
use crate::error::{Error, Result};
use crate::qseries::metallic_series;

/// Label carried by every scan report: these are observations, not claims.
pub const EXPLORATORY: &str = "exploratory";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriodicityVerdict {
    /// `D_{j+2n(n+1)} = (-1)^n D_j` on the whole window.
    Holds,
    Fails { j: usize },
    /// The window is shorter than one (anti)period plus one value.
    WindowTooShort,
}

/// Observed behaviour of `Delta^{(l)}` for a shift beyond `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub label: &'static str,
    pub n: usize,
    pub ell: usize,
    pub horizon: usize,
    pub values: Vec<BigInt>,
    pub value_min: BigInt,
    pub value_max: BigInt,
    pub max_abs: BigInt,
    pub periodicity_verdict: PeriodicityVerdict,
    /// For `l = n + 2` only: the conjectured bound on `|Delta|`.
    pub conjectured_bound: Option<u32>,
    /// Whether the window stayed within `conjectured_bound`.
    pub within_bound: Option<bool>,
}

/// Brute-force scan of `Delta_0^{(l)} .. Delta_{horizon-1}^{(l)}`, `l >= n + 2`.
pub fn conjecture_scan(n: usize, l: usize, horizon: usize) -> Result<ConjectureReport> {
    if l < n + 2 {
        return Err(Error::InvalidArgument(format!("scan covers shifts l >= n + 2 = {}, got {l}", n + 2)));
    }
    if horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be positive".into()));
    }
    let f = metallic_series(n, l + 2 * horizon)?;
    let values = bruteforce_sequence(&f, l, horizon)?;
    let value_min = values.iter().min().expect("horizon > 0").clone();
    let value_max = values.iter().max().expect("horizon > 0").clone();
    let max_abs = values.iter().map(Signed::abs).max().expect("horizon > 0");
    let p = 2 * n * (n + 1);
    let periodicity_verdict = if values.len() <= p {
        PeriodicityVerdict::WindowTooShort
    } else {
        match (0..values.len() - p).find(|&j| {
            let want = if n % 2 == 1 { -&values[j] } else { values[j].clone() };
            values[j + p] != want
        }) {
            Some(j) => PeriodicityVerdict::Fails { j: j + p },
            None => PeriodicityVerdict::Holds,
        }
    };
    let conjectured_bound = (l == n + 2).then_some(if n == 1 { 1 } else { 2 });
    let within_bound = conjectured_bound.map(|b| max_abs <= BigInt::from(b));
    Ok(ConjectureReport {
        label: EXPLORATORY,
        n,
        ell: l,
        horizon,
        values,
        value_min,
        value_max,
        max_abs,
        periodicity_verdict,
        conjectured_bound,
        within_bound,
    })
}
