//! Closed forms for the support and the nonzero values of `Delta_j` of the
//! q-metallic numbers, `n >= 3`.

use std::fmt;

use num_bigint::BigInt;

use super::CheckResult;
use crate::error::{Error, Result};

/// Residue of the support index `q` modulo 3: `s_{3p}`, `s_{3p+1}`, `s_{3p+2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidueClass {
    Zero,
    One,
    Two,
}

impl ResidueClass {
    pub fn of(q: usize) -> (usize, Self) {
        let class = match q % 3 {
            0 => ResidueClass::Zero,
            1 => ResidueClass::One,
            _ => ResidueClass::Two,
        };
        (q / 3, class)
    }
}

fn need_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("closed forms need n >= 3, got {n}")));
    }
    Ok(())
}

fn out_of_range(n: usize, p: usize, class: ResidueClass) -> Error {
    Error::InvalidArgument(format!("p = {p} out of range for class {class:?} and n = {n}"))
}

fn sign(e: usize) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `s_{3p + class}` for `0 <= 3p + class <= 6n - 4`.
pub fn explicit_s(n: usize, p: usize, class: ResidueClass) -> Result<usize> {
    need_n(n)?;
    let m = n + 1;
    let v = match class {
        ResidueClass::Zero if p < n => p * m,
        ResidueClass::Zero if p == n => m * m,
        ResidueClass::Zero if p <= 2 * n - 2 => 1 + (p + 3) * n,
        ResidueClass::One if p < n => 1 + p * m,
        ResidueClass::One if p <= 2 * n - 2 => n + (p + 1) * m,
        ResidueClass::Two if p + 2 <= n => (p + 1) * n,
        ResidueClass::Two if p + 1 == n => n * m,
        ResidueClass::Two if p <= 2 * n - 2 => (p + 2) * m,
        _ => return Err(out_of_range(n, p, class)),
    };
    Ok(v)
}

/// `Delta_{s_{3p + class}}` over the first (anti)period.
pub fn explicit_delta(n: usize, p: usize, class: ResidueClass) -> Result<i8> {
    need_n(n)?;
    let t = n * (n - 1) / 2;
    let v = match class {
        ResidueClass::Zero if p < n => sign(p * t + p * p.saturating_sub(1) / 2),
        ResidueClass::Zero if p == n => sign(n * (n + 1) * (n + 2) / 2),
        ResidueClass::Zero if p <= 2 * n - 2 => sign((p + 1) * t + n),
        ResidueClass::One if p <= 2 * n - 2 => sign(p * t + p * (p + 1) / 2),
        ResidueClass::Two if p + 2 <= n => sign((p + 1) * t),
        ResidueClass::Two if p + 1 == n => sign(n * (n - 1) * (n - 1) / 2),
        ResidueClass::Two if p <= 2 * n - 3 => sign(p * t + (p + 1) * (p + 2) / 2),
        _ => return Err(out_of_range(n, p, class)),
    };
    Ok(v)
}

/// `Delta_0 .. Delta_{2n(n+1)-1}` rebuilt from the closed forms: the values
/// at `s_0 .. s_{6n-5}` and zero elsewhere.
pub fn explicit_first_period(n: usize) -> Result<Vec<i8>> {
    need_n(n)?;
    let mut out = vec![0i8; 2 * n * (n + 1)];
    for q in 0..=6 * n - 5 {
        let (p, class) = ResidueClass::of(q);
        out[explicit_s(n, p, class)?] = explicit_delta(n, p, class)?;
    }
    Ok(out)
}

/// `Delta_j = (-1)^{n(n+1)/2} Delta_{(2n+1)(n+1)-j}` for `0 <= j <= (2n+1)(n+1)`.
pub fn symmetry_check(values: &[BigInt], n: usize) -> CheckResult {
    let name = "reflection_symmetry";
    let top = (2 * n + 1) * (n + 1);
    if values.len() <= top {
        return CheckResult::failed(name, values.len(), "value in range", "missing");
    }
    let negate = (n * (n + 1) / 2) % 2 == 1;
    for j in 0..=top {
        let want = if negate { -&values[top - j] } else { values[top - j].clone() };
        if values[j] != want {
            return CheckResult::failed(name, j, want, &values[j]);
        }
    }
    CheckResult::passed(name)
}

/// Which of the five arithmetic conditions puts an index in the support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SupportCondition {
    /// `j = 0 mod n+1`
    I,
    /// `j = 1 mod n+1`, `1 <= j <= n^2`
    II,
    /// `j = n mod n+1`, `n + (n+1)^2 <= j <= n + (2n-1)(n+1)`
    III,
    /// `j = 0 mod n`, `n <= j <= (n-1)n`
    IV,
    /// `j = 1 mod n`, `1 + (n+4)n <= j <= 1 + (2n+1)n`
    V,
}

impl fmt::Display for SupportCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SupportCondition::I => "i",
            SupportCondition::II => "ii",
            SupportCondition::III => "iii",
            SupportCondition::IV => "iv",
            SupportCondition::V => "v",
        };
        f.write_str(s)
    }
}

/// Support membership of `j`, decided on `j - periods * 2n(n+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub condition: Option<SupportCondition>,
    pub periods: usize,
}

/// Whether `Delta_j(Phi_n) != 0`, with the condition that fired.
pub fn support_membership(n: usize, j: usize) -> Result<Membership> {
    need_n(n)?;
    let period = 2 * n * (n + 1);
    let (periods, r) = if j <= period { (0, j) } else { (j / period, j % period) };
    let m = n + 1;
    let within = |lo: usize, hi: usize| lo <= r && r <= hi;
    let condition = if r % m == 0 {
        Some(SupportCondition::I)
    } else if r % m == 1 && within(1, n * n) {
        Some(SupportCondition::II)
    } else if r % m == n && within(n + m * m, n + (2 * n - 1) * m) {
        Some(SupportCondition::III)
    } else if r % n == 0 && within(n, (n - 1) * n) {
        Some(SupportCondition::IV)
    } else if r % n == 1 && within(1 + (n + 4) * n, 1 + (2 * n + 1) * n) {
        Some(SupportCondition::V)
    } else {
        None
    };
    Ok(Membership { member: condition.is_some(), condition, periods })
}
