//! Identities inside one period of the metallic H-fraction and its profile,
//! `n >= 3`. Indices follow the fraction: level 0 is the head.

use super::CheckResult;
use crate::algebra::{BigRational, Coeff, Polynomial};
use crate::cfrac::PeriodicHFraction;
use crate::error::{Error, Result};
use crate::hfrac::{support_profile, SupportProfile};

fn need_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("symmetry checks need n >= 3, got {n}")));
    }
    Ok(())
}

fn eq_check<T: PartialEq + std::fmt::Display>(
    name: &str,
    cases: impl IntoIterator<Item = (usize, T, T)>,
) -> CheckResult {
    for (i, want, got) in cases {
        if want != got {
            return CheckResult::failed(name, i, want, got);
        }
    }
    CheckResult::passed(name)
}

/// Identities of `k`, `s` and `eps` over the first period.
pub fn profile_identities(n: usize, p: &SupportProfile) -> Result<Vec<CheckResult>> {
    need_n(n)?;
    let per = 6 * n - 4;
    if p.k.len() < per + 3 {
        return Err(Error::InsufficientTerms { requested: per + 3, certified: p.k.len() });
    }
    let (k, s, e) = (&p.k, &p.s, &p.eps);
    let big = n * (n + 1) * (2 * n + 1) / 6;
    Ok(vec![
        eq_check("k_reflection", (0..=6 * n - 2).map(|i| (i, k[6 * n - 2 - i], k[i]))),
        eq_check("k_translation", (0..=3 * n - 3).map(|i| (i, k[i], k[i + 3 * n + 1]))),
        eq_check("k_half_reflection", (0..=3 * n - 3).map(|i| (i, k[3 * n - 3 - i], k[i]))),
        eq_check("s_translation", (0..=3 * n - 2).map(|j| (j, s[j] + n + (n + 1) * (n + 1), s[j + 3 * n + 1]))),
        eq_check("s_reflection", (0..=6 * n - 1).map(|j| (j, (2 * n + 1) * (n + 1), s[j] + s[6 * n - 1 - j]))),
        eq_check("eps_translation", (0..=3 * n - 2).map(|j| (j, e[j] + big, e[j + 3 * n + 1]))),
        eq_check(
            "eps_reflection",
            (0..=6 * n - 1).map(|j| (j, big + n * (n - 1) * (n - 2) / 3, e[j] + e[6 * n - 1 - j])),
        ),
        eq_check("s_period_end", [(per, 2 * n * (n + 1), s[per])]),
        eq_check("eps_period_end", [(per, (2 * n - 1) * (n * n - n + 3) / 3, e[per])]),
    ])
}

/// The three families of numerator/denominator symmetries of the period.
pub fn hfraction_symmetries<C: Coeff>(n: usize, h: &PeriodicHFraction<C>) -> Result<Vec<CheckResult>> {
    need_n(n)?;
    let domain = h.head.a.domain();
    let alpha = |i: usize| h.numerator(i).expect("periodic fraction");
    let beta = |i: usize| h.denominator(i).expect("periodic fraction").clone();
    let q = Polynomial::q_pow(domain, 1);
    let chi = |i: usize| match i % 3 {
        0 => Polynomial::zero(domain),
        1 => q.clone(),
        _ => -q.clone(),
    };
    let type2_beta = std::iter::once((0, &beta(3 * n - 3) - &q, beta(0)))
        .chain((1..=3 * n - 4).map(|i| (i, &beta(3 * n - 3 - i) + &chi(i), beta(i))));
    Ok(vec![
        eq_check("numerator_reflection", (1..=6 * n - 2).map(|i| (i, alpha(6 * n - 1 - i), alpha(i)))),
        eq_check("denominator_reflection", (1..=6 * n - 3).map(|i| (i, beta(6 * n - 2 - i), beta(i)))),
        eq_check("first_block_numerators", (1..=3 * n - 3).map(|i| (i, alpha(3 * n - 2 - i), alpha(i)))),
        eq_check("first_block_denominators", type2_beta),
        eq_check("numerator_half_period", (1..=3 * n - 3).map(|i| (i, alpha(i + 3 * n + 1), alpha(i)))),
    ])
}

/// Both families on the fraction found by Algorithm Q.
pub fn symmetry_suite(n: usize, h: &PeriodicHFraction<BigRational>) -> Result<Vec<CheckResult>> {
    let prof = support_profile(h, 6 * n);
    let mut out = profile_identities(n, &prof)?;
    out.extend(hfraction_symmetries(n, h)?);
    Ok(out)
}
