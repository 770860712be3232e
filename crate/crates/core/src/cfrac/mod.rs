//! Continued fractions over power series: generic evaluation, H-fraction
//! data, greedy expansion and the Artin regular expansion.

mod artin;
mod greedy;

pub use artin::{artin_expand, artin_to_hf, hf_to_artin, ArtinExpansion, InvPoly, RegularCf};
pub use greedy::{greedy_hfraction, GreedyExpansion};

use crate::algebra::{Coeff, FieldCoeff, Polynomial, TruncatedSeries};
use crate::error::{Error, Result};

/// Why an expansion stopped producing terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionEnd {
    /// The remainder is zero to the available precision; the expansion is
    /// finite as far as the input can tell.
    RemainderVanished,
    /// Not enough input coefficients to certify another term.
    PrecisionExhausted,
    /// The caller's term limit was reached.
    TermLimit,
}

/// One level `alpha / (beta + ...)` of a continued fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfTerm<C: Coeff> {
    pub num: Polynomial<C>,
    pub den: Polynomial<C>,
}

/// `alpha_0 / (beta_0 + alpha_1 / (beta_1 + ...))`, finite or eventually
/// periodic. An empty cycle means the fraction stops after the preamble.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfTermList<C: Coeff> {
    pub preamble: Vec<CfTerm<C>>,
    pub cycle: Vec<CfTerm<C>>,
}

impl<C: Coeff> CfTermList<C> {
    pub fn finite(terms: Vec<CfTerm<C>>) -> Self {
        CfTermList { preamble: terms, cycle: Vec::new() }
    }

    pub fn term(&self, i: usize) -> Option<&CfTerm<C>> {
        if i < self.preamble.len() {
            return self.preamble.get(i);
        }
        if self.cycle.is_empty() {
            return None;
        }
        Some(&self.cycle[(i - self.preamble.len()) % self.cycle.len()])
    }
}

/// The series of a continued fraction to precision `prec`.
///
/// Truncating after term `T` perturbs the value at order at least
/// `val(alpha_0) + ... + val(alpha_{T+1})` when every tail is a unit, so the
/// fraction is unrolled until that sum reaches `prec` and then evaluated from
/// the bottom.
pub fn eval_cf<C: FieldCoeff>(cf: &CfTermList<C>, prec: usize) -> Result<TruncatedSeries<C>> {
    let first = cf.term(0).ok_or_else(|| Error::InvalidArgument("empty continued fraction".into()))?;
    if !cf.cycle.is_empty() {
        let pass = cf.cycle.iter().fold(0usize, |acc, t| acc.saturating_add(t.num.lowest_term().map_or(usize::MAX, |(k, _)| k)));
        if pass == 0 {
            return Err(Error::IllPosedFraction {
                index: cf.preamble.len(),
                reason: "cycle numerators have total valuation 0".into(),
            });
        }
    }
    let mut last = 0;
    let mut order = first.num.lowest_term().map_or(prec, |(k, _)| k);
    while order < prec {
        let Some((v, _)) = cf.term(last + 1).and_then(|t| t.num.lowest_term()) else { break };
        order += v;
        if order < prec {
            last += 1;
        }
    }
    let series = |p: &Polynomial<C>| TruncatedSeries::from_poly(p, prec);
    let mut tail = series(&cf.term(last).expect("in range").den)?;
    for i in (1..=last).rev() {
        let t = cf.term(i).expect("in range");
        if tail.coeff(0).is_some_and(Coeff::is_zero) {
            return Err(Error::IllPosedFraction { index: i, reason: "denominator is not a unit".into() });
        }
        tail = series(&cf.term(i - 1).expect("in range").den)?.add(&series(&t.num)?.mul(&tail.invert()?));
    }
    if tail.coeff(0).is_some_and(Coeff::is_zero) {
        return Err(Error::IllPosedFraction { index: 0, reason: "denominator is not a unit".into() });
    }
    Ok(series(&first.num)?.mul(&tail.invert()?))
}

/// One H-fraction level produced by Algorithm Q or the greedy expansion:
/// lowest term `a q^k` and denominator `D` with `D(0) = 1`, `deg D <= k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HTerm<C: Coeff> {
    pub k: usize,
    pub a: C,
    pub d: Polynomial<C>,
}

impl<C: Coeff> HTerm<C> {
    /// The sign-convention scalar `v = -a` of the standard H-fraction form.
    pub fn v(&self) -> C {
        self.a.neg()
    }
}

/// `-a_0 q^{k_0} / (D_0 + a_1 q^{k_0+k_1+2} / (D_1 + ...))`, stored as a
/// distinguished head, a preamble and a repeating cycle. An empty cycle is
/// a finite fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicHFraction<C: Coeff> {
    pub head: HTerm<C>,
    pub preamble: Vec<HTerm<C>>,
    pub cycle: Vec<HTerm<C>>,
}

impl<C: Coeff> PeriodicHFraction<C> {
    /// Builds the fraction for the term stream `terms[0], terms[1], ...`
    /// where, if `repeat_from` is given, the stream continues periodically
    /// with `terms[repeat_from..]` as one period.
    pub fn from_stream(mut terms: Vec<HTerm<C>>, repeat_from: Option<usize>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidArgument("no terms".into()));
        }
        let head = terms.remove(0);
        let (preamble, cycle) = match repeat_from {
            None => (terms, Vec::new()),
            Some(0) => {
                // the head itself repeats: start the cycle one step later
                let mut cycle = terms;
                cycle.push(head.clone());
                (Vec::new(), cycle)
            }
            Some(p) => {
                let cycle = terms.split_off(p - 1);
                (terms, cycle)
            }
        };
        if repeat_from.is_some() && cycle.is_empty() {
            return Err(Error::InvalidArgument("empty cycle".into()));
        }
        let mut h = PeriodicHFraction { head, preamble, cycle };
        h.canonicalize();
        Ok(h)
    }

    /// Shrinks the cycle to its minimal period and moves its start as early
    /// as possible. The represented term stream is unchanged.
    pub fn canonicalize(&mut self) {
        let len = self.cycle.len();
        if len > 1 {
            let p = (1..=len)
                .find(|&p| len.is_multiple_of(p) && (p..len).all(|i| self.cycle[i] == self.cycle[i - p]))
                .unwrap_or(len);
            self.cycle.truncate(p);
        }
        while !self.cycle.is_empty() && self.preamble.last() == self.cycle.last() {
            self.preamble.pop();
            self.cycle.rotate_right(1);
        }
    }

    pub fn delta(&self) -> usize {
        2
    }

    /// Index of the first cycle term.
    pub fn offset(&self) -> usize {
        1 + self.preamble.len()
    }

    pub fn period(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_finite(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Number of terms of a finite fraction.
    pub fn len(&self) -> Option<usize> {
        self.is_finite().then(|| 1 + self.preamble.len())
    }

    pub fn term(&self, j: usize) -> Option<&HTerm<C>> {
        if j == 0 {
            return Some(&self.head);
        }
        let i = j - 1;
        if i < self.preamble.len() {
            return Some(&self.preamble[i]);
        }
        if self.cycle.is_empty() {
            return None;
        }
        Some(&self.cycle[(i - self.preamble.len()) % self.cycle.len()])
    }

    /// The first `count` terms (fewer for a short finite fraction).
    pub fn prefix(&self, count: usize) -> Vec<HTerm<C>> {
        (0..count).map_while(|j| self.term(j).cloned()).collect()
    }

    /// Numerator of level `j`: `-a_0 q^{k_0}` for the head, then
    /// `a_j q^{k_{j-1}+k_j+2}`.
    pub fn numerator(&self, j: usize) -> Option<Polynomial<C>> {
        let t = self.term(j)?;
        if j == 0 {
            return Some(Polynomial::monomial(t.a.neg(), t.k));
        }
        let prev = self.term(j - 1)?;
        Some(Polynomial::monomial(t.a.clone(), prev.k + t.k + 2))
    }

    pub fn denominator(&self, j: usize) -> Option<&Polynomial<C>> {
        self.term(j).map(|t| &t.d)
    }

    /// The same fraction as a generic numerator/denominator list.
    pub fn to_cf_terms(&self) -> CfTermList<C> {
        let level = |j: usize| CfTerm {
            num: self.numerator(j).expect("in range"),
            den: self.denominator(j).expect("in range").clone(),
        };
        let pre = self.offset();
        CfTermList {
            preamble: (0..pre).map(level).collect(),
            cycle: (pre..pre + self.period()).map(level).collect(),
        }
    }

    pub fn map<D: Coeff>(&self, domain: crate::algebra::CoeffDomain, f: impl Fn(&C) -> D) -> PeriodicHFraction<D> {
        let m = |t: &HTerm<C>| HTerm { k: t.k, a: f(&t.a), d: t.d.map(domain, &f) };
        PeriodicHFraction {
            head: m(&self.head),
            preamble: self.preamble.iter().map(m).collect(),
            cycle: self.cycle.iter().map(m).collect(),
        }
    }
}

/// Numerators of a term prefix in the standard form, head included.
pub fn numerators<C: Coeff>(terms: &[HTerm<C>]) -> Vec<Polynomial<C>> {
    terms
        .iter()
        .enumerate()
        .map(|(j, t)| {
            if j == 0 {
                Polynomial::monomial(t.a.neg(), t.k)
            } else {
                Polynomial::monomial(t.a.clone(), terms[j - 1].k + t.k + 2)
            }
        })
        .collect()
}

/// Evaluates a finite prefix of H-fraction terms.
pub fn eval_terms<C: FieldCoeff>(terms: &[HTerm<C>], prec: usize) -> Result<TruncatedSeries<C>> {
    let nums = numerators(terms);
    let list = nums.into_iter().zip(terms).map(|(num, t)| CfTerm { num, den: t.d.clone() }).collect();
    eval_cf(&CfTermList::finite(list), prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BigRational, CoeffDomain};
    use crate::qseries::{catalan_series, metallic_series};

    const QQ: CoeffDomain = CoeffDomain::Rationals;

    fn qp(c: &[i64]) -> Polynomial<BigRational> {
        Polynomial::from_i64s(QQ, c)
    }

    fn term(num: &[i64], den: &[i64]) -> CfTerm<BigRational> {
        CfTerm { num: qp(num), den: qp(den) }
    }

    fn as_ints(s: &TruncatedSeries<BigRational>) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(&c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn golden_fraction_evaluates_to_golden_series() {
        let cf = CfTermList {
            preamble: vec![term(&[1], &[1])],
            cycle: vec![term(&[0, 0, -1], &[1, 1]), term(&[0, 0, 0, 1], &[1, 1, -1]), term(&[0, 0, 0, 1], &[1, 1])],
        };
        let got = eval_cf(&cf, 16).unwrap();
        let want = metallic_series(1, 16).unwrap();
        assert_eq!(as_ints(&got), want.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>());
    }

    #[test]
    fn catalan_c_fraction() {
        let cf = CfTermList { preamble: vec![term(&[1], &[1])], cycle: vec![term(&[0, -1], &[1])] };
        assert_eq!(as_ints(&eval_cf(&cf, 7).unwrap()), vec![1, 1, 2, 5, 14, 42, 132]);
        let cat = catalan_series(30).unwrap();
        let got = eval_cf(&cf, 30).unwrap();
        assert_eq!(as_ints(&got), cat.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>());
    }

    #[test]
    fn finite_fraction() {
        let cf = CfTermList::finite(vec![term(&[1], &[1, 1])]);
        assert_eq!(as_ints(&eval_cf(&cf, 5).unwrap()), vec![1, -1, 1, -1, 1]);
    }

    #[test]
    fn ill_posed_fractions_report_index() {
        let cf = CfTermList { preamble: vec![term(&[1], &[1])], cycle: vec![term(&[1], &[1])] };
        assert!(matches!(eval_cf(&cf, 5), Err(Error::IllPosedFraction { index: 1, .. })));
        let cf = CfTermList::finite(vec![term(&[1], &[1]), term(&[0, 1], &[0, 1])]);
        assert!(matches!(eval_cf(&cf, 5), Err(Error::IllPosedFraction { index: 1, .. })));
    }

    fn ht(k: usize, a: i64, d: &[i64]) -> HTerm<BigRational> {
        HTerm { k, a: BigRational::from_integer(a.into()), d: qp(d) }
    }

    #[test]
    fn canonical_form_is_minimal_and_early() {
        let x = ht(0, 1, &[1]);
        let y = ht(1, -1, &[1, 1]);
        // stream h, x, y, x, y, ... given with a redundant preamble and doubled cycle
        let h = PeriodicHFraction::from_stream(
            vec![ht(0, -1, &[1]), x.clone(), y.clone(), x.clone(), y.clone(), x.clone()],
            Some(2),
        )
        .unwrap();
        assert_eq!(h.preamble, vec![]);
        assert_eq!(h.cycle, vec![x.clone(), y.clone()]);
        assert_eq!((h.offset(), h.period()), (1, 2));
        assert_eq!(h.term(5), Some(&x));
    }

    #[test]
    fn head_repeating_stream() {
        let x = ht(0, -1, &[1]);
        let h = PeriodicHFraction::from_stream(vec![x.clone()], Some(0)).unwrap();
        assert_eq!(h.head, x);
        assert_eq!(h.cycle, vec![x]);
    }
}
