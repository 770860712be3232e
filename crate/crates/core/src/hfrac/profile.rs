use std::collections::BTreeSet;

use crate::algebra::Coeff;
use crate::cfrac::{HTerm, PeriodicHFraction};
use crate::error::{Error, Result};

/// `s_p = p + k_0 + ... + k_{p-1}` and `eps_p = sum_{i<p} k_i (k_i + 1) / 2`.
/// `k` has one entry per term; `s` and `eps` have one more.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportProfile {
    pub k: Vec<usize>,
    pub s: Vec<usize>,
    pub eps: Vec<usize>,
    /// Cycle length of the fraction the profile came from, if periodic.
    pub period_len: Option<usize>,
    /// Whether the fraction ends after `k.len()` terms.
    pub complete: bool,
}

impl SupportProfile {
    pub fn from_ks(k: Vec<usize>, period_len: Option<usize>, complete: bool) -> Self {
        let mut s = vec![0];
        let mut eps = vec![0];
        for (i, &ki) in k.iter().enumerate() {
            s.push(s[i] + 1 + ki);
            eps.push(eps[i] + ki * (ki + 1) / 2);
        }
        SupportProfile { k, s, eps, period_len, complete }
    }

    /// Largest index whose membership is decided.
    pub fn certified(&self) -> usize {
        *self.s.last().expect("s_0 exists")
    }

    /// Whether `j` is one of the `s_p`; `None` when `j` is past the profile.
    pub fn contains(&self, j: usize) -> Option<bool> {
        if j > self.certified() {
            return self.complete.then_some(false);
        }
        Some(self.s.binary_search(&j).is_ok())
    }

    /// `{s_p} ∩ [0, limit]`.
    pub fn support_up_to(&self, limit: usize) -> BTreeSet<usize> {
        self.s.iter().copied().filter(|&x| x <= limit).collect()
    }
}

/// The profile of the first `horizon` terms (all terms of a shorter finite
/// fraction).
pub fn support_profile<C: Coeff>(h: &PeriodicHFraction<C>, horizon: usize) -> SupportProfile {
    let terms = h.prefix(horizon);
    let complete = h.len().is_some_and(|len| len <= horizon);
    let period = (!h.is_finite()).then(|| h.period());
    SupportProfile::from_ks(terms.iter().map(|t| t.k).collect(), period, complete)
}

/// `Delta_0 .. Delta_{horizon-1}` from H-fraction terms:
/// `Delta_{s_p} = (-1)^{eps_p} prod_{i<p} v_i^{s_p - s_i}` and zero off the
/// support. With `complete`, the terms are the whole fraction and every
/// index past `s_m` is zero; otherwise indices past `s_m` are uncertified.
pub fn hankel_from_terms<C: Coeff>(terms: &[HTerm<C>], complete: bool, horizon: usize) -> Result<Vec<C>> {
    let Some(first) = terms.first() else {
        return Err(Error::InvalidArgument("no terms".into()));
    };
    let domain = first.a.domain();
    let prof = SupportProfile::from_ks(terms.iter().map(|t| t.k).collect(), None, complete);
    if horizon > 0 && !complete && horizon - 1 > prof.certified() {
        return Err(Error::InsufficientTerms { requested: horizon - 1, certified: prof.certified() });
    }
    let vs: Vec<C> = terms.iter().map(HTerm::v).collect();
    let mut out = vec![C::zero(domain); horizon];
    for (p, &sp) in prof.s.iter().enumerate() {
        if sp >= horizon {
            break;
        }
        let mut val = if prof.eps[p].is_multiple_of(2) { C::one(domain) } else { C::one(domain).neg() };
        for (i, v) in vs.iter().enumerate().take(p) {
            val = val.mul(&v.pow((sp - prof.s[i]) as u64));
        }
        out[sp] = val;
    }
    Ok(out)
}

/// `Delta_0 .. Delta_{horizon-1}` of the series represented by `h`.
pub fn hankel_values<C: Coeff>(h: &PeriodicHFraction<C>, horizon: usize) -> Result<Vec<C>> {
    let mut terms = Vec::new();
    let mut s = 0usize;
    while s + 1 < horizon {
        let Some(t) = h.term(terms.len()) else { break };
        s += t.k + 1;
        terms.push(t.clone());
    }
    if terms.is_empty() {
        terms.push(h.head.clone());
    }
    let complete = h.len().is_some_and(|len| len == terms.len());
    hankel_from_terms(&terms, complete, horizon)
}

/// A single `Delta_j`.
pub fn hankel_from_hfraction<C: Coeff>(h: &PeriodicHFraction<C>, j: usize) -> Result<C> {
    Ok(hankel_values(h, j + 1)?.pop().expect("horizon j + 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BigRational, CoeffDomain, Polynomial};
    use crate::hfrac::expected_hfraction;

    const QQ: CoeffDomain = CoeffDomain::Rationals;

    fn ints(v: &[BigRational]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(&c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn golden_hankel() {
        let h = expected_hfraction::<BigRational>(QQ, 1).unwrap();
        assert_eq!(ints(&hankel_values(&h, 8).unwrap()), vec![1, 1, 1, 0, -1, -1, -1, 0]);
        assert_eq!(ints(&[hankel_from_hfraction(&h, 0).unwrap()]), vec![1]);
    }

    #[test]
    fn n5_profile() {
        let h = expected_hfraction::<BigRational>(QQ, 5).unwrap();
        let p = support_profile(&h, 40);
        assert_eq!(
            &p.k[..18],
            &[0, 3, 0, 0, 2, 1, 0, 1, 2, 0, 0, 3, 0, 4, 5, 4, 0, 3]
        );
        assert_eq!(p.s[26], 60);
        assert_eq!(
            ints(&hankel_values(&h, 12).unwrap()),
            vec![1, 1, 0, 0, 0, 1, 1, -1, 0, 0, 1, 0]
        );
    }

    #[test]
    fn finite_fraction_support_ends() {
        // F = 1: one term, Delta = 1, 1, 0, 0, ...
        let t = HTerm { k: 0, a: BigRational::from_integer((-1).into()), d: Polynomial::one(QQ) };
        let h = PeriodicHFraction::from_stream(vec![t.clone()], None).unwrap();
        assert_eq!(ints(&hankel_values(&h, 5).unwrap()), vec![1, 1, 0, 0, 0]);
        assert!(matches!(
            hankel_from_terms(&[t], false, 5),
            Err(Error::InsufficientTerms { requested: 4, certified: 1 })
        ));
    }
}
