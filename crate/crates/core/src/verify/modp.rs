use num_bigint::BigInt;

use super::hankel::bruteforce_sequence;
use super::CheckResult;
use crate::algebra::{reduce_mod, CoeffDomain, Fp};
use crate::cfrac::PeriodicHFraction;
use crate::error::Result;
use crate::hfrac::{hankel_values, hfraction_of_quadratic, CycleSearch, SupportProfile};
use crate::qseries::{metallic_series, shifted_metallic_model, QuadraticModel};

/// How many `Delta_j` the reduction consistency check compares.
const CONSISTENCY_HORIZON: usize = 61;

/// Integer model whose root is the `l`-th shift of the q-metallic number,
/// for any `l`. Past `n + 1` the closed form is shifted one coefficient at
/// a time.
pub fn reduced_shifted_model(n: usize, l: usize) -> Result<QuadraticModel<BigInt>> {
    if l <= n + 1 {
        return shifted_metallic_model(n, l);
    }
    let f = metallic_series(n, l)?;
    let mut m = shifted_metallic_model(n, n + 1)?;
    for c in &f.coeffs()[n + 1..l] {
        m = m.shift(c)?;
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModpOutcome {
    /// Algorithm Q over `F_p` repeated a model (or ended).
    Cycle {
        /// Minimal preperiod of the term stream; the term count for a finite fraction.
        hfraction_preperiod: usize,
        /// 0 for a finite fraction.
        hfraction_period: usize,
        hankel_preperiod: usize,
        hankel_period: usize,
        hfraction: PeriodicHFraction<Fp>,
        consistency: CheckResult,
    },
    /// No repetition within the step budget. Not a refutation.
    Inconclusive { steps: usize },
    /// The shifted series is zero modulo `p`, so it has no H-fraction.
    VanishingSeries,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModpReport {
    pub n: usize,
    pub ell: usize,
    pub p: u64,
    pub max_steps: usize,
    pub outcome: ModpOutcome,
}

impl ModpReport {
    pub fn is_conclusive(&self) -> bool {
        !matches!(self.outcome, ModpOutcome::Inconclusive { .. })
    }
}

/// Runs Algorithm Q on the shifted model reduced modulo `p`, then derives
/// the eventual period of `Delta_j^{(l)} mod p` from the fraction.
pub fn modp_analysis(n: usize, l: usize, p: u64, max_steps: usize) -> Result<ModpReport> {
    let domain = CoeffDomain::prime_field(p)?;
    let model = reduced_shifted_model(n, l)?.map(domain, |c| reduce_mod(c, p));
    let report = |outcome| ModpReport { n, ell: l, p, max_steps, outcome };
    if model.a.is_zero() {
        return Ok(report(ModpOutcome::VanishingSeries));
    }
    let h = match hfraction_of_quadratic(&model, max_steps)? {
        CycleSearch::Found(h) => h,
        CycleSearch::Exhausted { prefix } => return Ok(report(ModpOutcome::Inconclusive { steps: prefix.len() })),
    };
    let (hankel_preperiod, hankel_period) = hankel_eventual_period(&h, p)?;
    let consistency = reduction_check(n, l, p, &h)?;
    let (hfraction_preperiod, hfraction_period) = match h.len() {
        Some(len) => (len, 0),
        None => {
            // The head may coincide with the last cycle term, in which case
            // the term stream is periodic from an earlier index.
            let terms = h.prefix(h.offset() + h.period());
            let pre = (0..h.offset()).rev().find(|&j| terms[j] != terms[j + h.period()]).map_or(0, |j| j + 1);
            (pre, h.period())
        }
    };
    Ok(report(ModpOutcome::Cycle {
        hfraction_preperiod,
        hfraction_period,
        hankel_preperiod,
        hankel_period,
        hfraction: h,
        consistency,
    }))
}

/// Minimal `(preperiod, period)` of `Delta_j mod p`.
///
/// From the first cycle term on, the support repeats with shift `S`, the
/// sum of `k + 1` over the cycle, and each value is multiplied by factors
/// in `F_p^*`. Following the product formula one cycle further multiplies
/// the step factor by a fixed unit, so `2(p-1)` cycles return every value:
/// `L = 2(p-1)S` is a period from `s_{offset}` on. The minimal period
/// divides `L`, and one window of length `L` past `s_{offset}` decides it.
fn hankel_eventual_period(h: &PeriodicHFraction<Fp>, p: u64) -> Result<(usize, usize)> {
    if let Some(len) = h.len() {
        let prof = SupportProfile::from_ks(h.prefix(len).iter().map(|t| t.k).collect(), None, true);
        return Ok((prof.certified() + 1, 1));
    }
    let offset = h.offset();
    let prof = SupportProfile::from_ks(h.prefix(offset + h.period()).iter().map(|t| t.k).collect(), None, false);
    let t0 = prof.s[offset];
    let shift = prof.s[offset + h.period()] - t0;
    let big_l = 2 * (p as usize - 1) * shift;
    let d = hankel_values(h, t0 + 2 * big_l)?;
    let repeats = |per: usize, from: usize, to: usize| (from..to).all(|j| d[j + per] == d[j]);
    let period = (1..=big_l)
        .filter(|per| big_l.is_multiple_of(*per))
        .find(|&per| repeats(per, t0, t0 + big_l))
        .expect("L is a period");
    let pre = (0..t0).rev().find(|&j| d[j + period] != d[j]).map_or(0, |j| j + 1);
    Ok((pre, period))
}

/// `Delta_j` over the integers reduced mod `p` against the `F_p` product
/// formula, for `j < 61`.
fn reduction_check(n: usize, l: usize, p: u64, h: &PeriodicHFraction<Fp>) -> Result<CheckResult> {
    let f = metallic_series(n, l + 2 * CONSISTENCY_HORIZON)?;
    let exact = bruteforce_sequence(&f, l, CONSISTENCY_HORIZON)?;
    let modular = hankel_values(h, CONSISTENCY_HORIZON)?;
    for (j, (e, m)) in exact.iter().zip(&modular).enumerate() {
        let r = reduce_mod(e, p);
        if r != *m {
            return Ok(CheckResult::failed("reduction_commutes", j, r, m));
        }
    }
    Ok(CheckResult::passed("reduction_commutes"))
}
